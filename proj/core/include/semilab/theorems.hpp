// Copyright 2026 the semilab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEMILAB_THEOREMS_HPP
#define SEMILAB_THEOREMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "semilab/iso.hpp"
#include "semilab/report.hpp"
#include "semilab/semigroup.hpp"

namespace semilab {

// ---------------------------------------------------------------------------
// Explicit structure witnesses for symmetric inverse monoids.
// ---------------------------------------------------------------------------

/// For alpha in IS_n with rank r: the sandwich element c in IS_r with
/// rank(c) = rank(alpha^2) together with the explicit chain map
/// local(IS_n, alpha) -> variant(IS_r, c).
///
/// With beta the unique inverse of alpha, c is alpha*alpha*beta carried from
/// its ambient subset (dom alpha, under the left-to-right composition
/// convention) down to degree r through the order-preserving relabelling;
/// the chain map sends x to the relabelling of x*beta.
struct ChainWitnessIS {
  PartialPerm c;
  FiniteSemigroup local;   // local(IS_n, alpha)
  FiniteSemigroup target;  // variant(IS_r, c), indices shared with IS_r
  std::vector<std::size_t> map;
};

ChainWitnessIS construct_c_IS(const FiniteSemigroup& ISn, std::size_t alpha,
                              const BuildOptions& options = {});

/// For alpha in IS_n with rank r: the rank-n element beta of IS_{2n-r} with
/// rank(beta^2) = r and the explicit isomorphism
/// variant(IS_n, alpha) -> local(IS_{2n-r}, beta).
///
/// After the order-preserving relabelling that sends ran(alpha) to {1..r},
/// beta maps each x_i (the preimage of i) to i and the points outside
/// dom(alpha) to n+1..2n-r in increasing order; gamma is its inverse.
/// alpha_embedded is the relabelled alpha viewed inside degree 2n-r and
/// equals beta*beta*gamma. Guarded by 2n-r <= 5.
struct VariantLocalWitnessIS {
  PartialPerm beta;
  PartialPerm gamma;
  PartialPerm alpha_embedded;
  FiniteSemigroup variant_S;  // variant(IS_n, alpha), indices shared with IS_n
  FiniteSemigroup local_T;    // local(IS_{2n-r}, beta)
  std::vector<std::size_t> map;
};

VariantLocalWitnessIS construct_beta_gamma(const FiniteSemigroup& ISn,
                                           std::size_t alpha,
                                           const BuildOptions& options = {});

// ---------------------------------------------------------------------------
// One verification routine per numbered result. Reports are deterministic
// for fixed parameters (modulo the timing fields).
// ---------------------------------------------------------------------------

/// |a T_n a| = rank(a)^rank(a) for every a in T_n.
VerificationReport verify_T_order(int n);

/// Full-rank a have a T_n a equal to T_n as a set.
VerificationReport verify_T_fullrank(int n);

/// For every a in T_n with rank r there is c in T_r with
/// rank(c) = rank(a^2) and local(T_n, a) isomorphic to variant(T_r, c);
/// c is found by exhaustive search in enumeration order and the witness
/// is verified.
VerificationReport verify_thm1_T(int n);

/// Stabiliser-1 elements of rank m have local isomorphic to T_m.
VerificationReport verify_prop_stab1(int n);

/// Equal-rank elements with stabiliser >= 2 have isomorphic locals;
/// all qualifying pairs get a verified witness (or a counterexample).
VerificationReport verify_prop_nonstab1(int n);

/// |alpha IS_n alpha| = sum_{k=0..m} C(m,k)^2 k! with m = rank(alpha).
VerificationReport verify_IS_order(int n);

/// Full-rank alpha have alpha IS_n alpha equal to IS_n as a set.
VerificationReport verify_IS_fullrank(int n);

/// For alpha with rank(alpha^2) = rank(alpha) < n: dom = ran and the local
/// is isomorphic to IS_A on A = ran(alpha).
VerificationReport verify_prop_pr1(int n);

/// Every alpha in IS_n: construct_c_IS yields rank(c) = rank(alpha^2) and a
/// chain map passing verify_morphism.
VerificationReport verify_thm_IS_chain(int n);

/// Every alpha in IS_n with 2n - rank(alpha) <= 5: construct_beta_gamma
/// yields rank(beta) = n, rank(beta^2) = rank(alpha), the construction
/// identities, and a verified isomorphism. Out-of-guard elements are
/// counted as skipped in the parameters.
VerificationReport verify_thm_IS_variant(int n);

/// Over all pairs (a, b) of S: if a = aba and b = bab then aSb = (ab)S(ab)
/// and bSa = (ba)S(ba) as sets.
VerificationReport verify_lemma_lm1(const FiniteSemigroup& S,
                                    const std::string& name);

/// Over all mutually-inverse pairs (a, b): the explicit witnesses
/// x -> x*b onto (aSb, *_aab) and x -> b*x onto (bSa, *_baa), with their
/// stated inverses, all pass verify_morphism.
VerificationReport verify_lemma_lm2(const FiniteSemigroup& S,
                                    const std::string& name);

/// Transport along a verified isomorphism phi: for every c in S, phi is an
/// isomorphism variant(S, c) -> variant(T, phi(c)).
VerificationReport verify_lemma_lm3(const FiniteSemigroup& S,
                                    const FiniteSemigroup& T,
                                    const std::vector<std::size_t>& phi,
                                    const std::string& name);

/// Pairs of IS_n with equal rank and equal rank of the square have
/// isomorphic locals. only_rank >= 0 restricts the sweep to that rank.
VerificationReport verify_final_prop(int n, int only_rank = -1);

/// variant(S, a) is isomorphic to S for every unit a; the explicit witness
/// x -> x*a is tried first, search is the fallback.
VerificationReport verify_unit_variant(const FiniteSemigroup& S,
                                       const std::string& name);

/// find_isomorphism(S, permuted_copy(S)) comes back isomorphic for `count`
/// seeded shuffles.
VerificationReport verify_shuffle_selftest(const FiniteSemigroup& S,
                                           const std::string& name, int count,
                                           std::uint64_t seed);

// ---------------------------------------------------------------------------
// Driver and replay.
// ---------------------------------------------------------------------------

/// Known result ids, in canonical order.
const std::vector<std::string>& verification_ids();

/// Runs one result id. max_n bounds the sweep size where a routine takes n;
/// fixed-target routines (the lemmas, unit variants, self-tests) ignore it.
/// seed feeds the shuffle-based routines.
VerificationReport run_verification(const std::string& id, int max_n,
                                    std::uint64_t seed = 0);

/// Outcome of re-running one instance from a failure payload.
struct InstanceCheck {
  bool ok = false;
  std::string observed;
  std::string expected;
};

/// Re-runs the single-instance check for a failure payload produced by the
/// sweep with the given result id. Throws std::invalid_argument for ids or
/// payloads it cannot interpret.
InstanceCheck replay_instance(const std::string& result_id,
                              const FieldList& payload);

/// "tn<k>" or "isn<k>" to the corresponding monoid.
FiniteSemigroup builtin_semigroup(const std::string& name,
                                  const BuildOptions& options = {});

}  // namespace semilab

#endif  // SEMILAB_THEOREMS_HPP
