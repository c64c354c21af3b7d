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

#include "semilab/document.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace semilab {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFormatTag = "semilab-semigroup/1";

std::string kind_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::transformation:
      return "transformation";
    case ElementKind::partial_perm:
      return "partial-permutation";
    case ElementKind::abstract_table:
      return "abstract-table";
  }
  throw std::logic_error("unknown element kind");
}

std::vector<std::vector<std::uint32_t>> table_rows(const FiniteSemigroup& S) {
  const std::size_t k = S.size();
  std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      rows[i][j] = static_cast<std::uint32_t>(S.product(i, j));
    }
  }
  return rows;
}

}  // namespace

SemigroupDocument semigroup_to_document(const FiniteSemigroup& S) {
  SemigroupDocument doc;
  doc.kind = kind_name(S.kind());
  doc.degree = S.degree();
  doc.elements = S.labels();
  if (S.kind() == ElementKind::abstract_table) doc.table = table_rows(S);
  doc.provenance = S.provenance();
  return doc;
}

FiniteSemigroup document_to_semigroup(const SemigroupDocument& doc,
                                      const BuildOptions& options) {
  if (doc.kind == "abstract-table") {
    if (!doc.table) {
      throw std::invalid_argument("abstract-table document requires a table");
    }
    const std::size_t k = doc.elements.size();
    std::vector<std::uint32_t> flat;
    flat.reserve(k * k);
    if (doc.table->size() != k) {
      throw std::invalid_argument("table row count must equal element count");
    }
    for (const auto& row : *doc.table) {
      if (row.size() != k) {
        throw std::invalid_argument("table must be square");
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return FiniteSemigroup::from_table(doc.elements, std::move(flat),
                                       doc.provenance, options);
  }

  FiniteSemigroup S = [&] {
    if (doc.kind == "transformation") {
      std::vector<Transformation> elements;
      elements.reserve(doc.elements.size());
      for (const std::string& text : doc.elements) {
        elements.push_back(parse_transformation(text, doc.degree));
      }
      return FiniteSemigroup::from_elements(std::move(elements), doc.provenance,
                                            options);
    }
    if (doc.kind == "partial-permutation") {
      std::vector<PartialPerm> elements;
      elements.reserve(doc.elements.size());
      for (const std::string& text : doc.elements) {
        elements.push_back(parse_partial_perm(text, doc.degree));
      }
      return FiniteSemigroup::from_elements(std::move(elements), doc.provenance,
                                            options);
    }
    throw std::invalid_argument("unknown document kind '" + doc.kind + "'");
  }();

  // a table in a map-kind document is redundant; accept it but insist that
  // it agrees with composition
  if (doc.table) {
    const std::size_t k = S.size();
    if (doc.table->size() != k) {
      throw std::invalid_argument("table row count must equal element count");
    }
    for (std::size_t i = 0; i < k; ++i) {
      if ((*doc.table)[i].size() != k) {
        throw std::invalid_argument("table must be square");
      }
      for (std::size_t j = 0; j < k; ++j) {
        if ((*doc.table)[i][j] != S.product(i, j)) {
          throw std::invalid_argument(
              "table disagrees with composition at (" + std::to_string(i) +
              ", " + std::to_string(j) + ")");
        }
      }
    }
  }
  return S;
}

std::string document_to_json(const SemigroupDocument& doc) {
  Json j = Json::object();
  j["format"] = kFormatTag;
  j["kind"] = doc.kind;
  if (doc.kind != "abstract-table") j["degree"] = doc.degree;
  j["elements"] = doc.elements;
  if (doc.table) j["table"] = *doc.table;
  if (doc.provenance) {
    Json p = Json::object();
    p["parent"] = doc.provenance->parent;
    p["construction"] = doc.provenance->construction;
    p["element"] = doc.provenance->element;
    p["assoc_check"] = doc.provenance->assoc_check;
    j["provenance"] = std::move(p);
  }
  return j.dump(2) + "\n";
}

SemigroupDocument document_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != kFormatTag) {
    throw std::invalid_argument("not a semilab semigroup document");
  }
  SemigroupDocument doc;
  doc.kind = j.at("kind").get<std::string>();
  doc.degree = j.value("degree", 0);
  doc.elements = j.at("elements").get<std::vector<std::string>>();
  if (j.contains("table")) {
    doc.table = j.at("table").get<std::vector<std::vector<std::uint32_t>>>();
  }
  if (j.contains("provenance")) {
    const Json& p = j.at("provenance");
    Provenance prov;
    prov.parent = p.value("parent", "");
    prov.construction = p.value("construction", "");
    prov.element = p.value("element", "");
    prov.assoc_check = p.value("assoc_check", "");
    doc.provenance = std::move(prov);
  }
  return doc;
}

void write_file_atomically(const std::string& path, const std::string& contents) {
  const std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + temp + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("write failed for " + temp);
  }
  if (std::rename(temp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("rename to " + path + " failed");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace semilab
