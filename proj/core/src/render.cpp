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

#include "semilab/render.hpp"

#include <algorithm>
#include <vector>

#include <json.hpp>

namespace semilab {

namespace {

std::string cell_text(const FiniteSemigroup& S, const GreenStructure& green,
                      const std::vector<std::size_t>& cell) {
  std::string text;
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (i > 0) text += ',';
    text += S.label(cell[i]);
    if (green.idempotent[cell[i]]) text += '*';
  }
  return text;
}

}  // namespace

std::string eggbox_to_ascii(const FiniteSemigroup& S) {
  const GreenStructure green = green_classes(S);
  const EggBox box = eggbox(S, green);
  std::string out;
  bool first = true;
  for (const EggBoxDClass& grid : box.d_classes) {
    if (!first) out += '\n';
    first = false;
    const std::size_t rows = grid.cells.size();
    const std::size_t cols = grid.cells.front().size();
    std::vector<std::vector<std::string>> texts(rows,
                                                std::vector<std::string>(cols));
    std::vector<std::size_t> width(cols, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        texts[r][c] = cell_text(S, green, grid.cells[r][c]);
        width[c] = std::max(width[c], texts[r][c].size());
      }
    }
    std::string border = "+";
    for (std::size_t c = 0; c < cols; ++c) {
      border += std::string(width[c] + 2, '-');
      border += '+';
    }
    out += border;
    out += '\n';
    for (std::size_t r = 0; r < rows; ++r) {
      out += '|';
      for (std::size_t c = 0; c < cols; ++c) {
        out += ' ';
        out += texts[r][c];
        out += std::string(width[c] - texts[r][c].size() + 1, ' ');
        out += '|';
      }
      out += '\n';
      out += border;
      out += '\n';
    }
  }
  return out;
}

std::string eggbox_to_dot(const FiniteSemigroup& S) {
  const GreenStructure green = green_classes(S);
  const EggBox box = eggbox(S, green);
  std::string out = "digraph eggbox {\n  node [shape=box];\n";
  for (std::size_t d = 0; d < box.d_classes.size(); ++d) {
    const EggBoxDClass& grid = box.d_classes[d];
    const std::size_t rows = grid.cells.size();
    const std::size_t cols = grid.cells.front().size();
    out += "  subgraph cluster_d" + std::to_string(d) + " {\n";
    out += "    label=\"D" + std::to_string(d) + " " + std::to_string(rows) +
           "x" + std::to_string(cols) + "\";\n";
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        out += "    d" + std::to_string(d) + "_r" + std::to_string(r) + "_c" +
               std::to_string(c) + " [label=\"" +
               cell_text(S, green, grid.cells[r][c]) + "\"];\n";
      }
    }
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

std::string eggbox_to_json(const FiniteSemigroup& S) {
  using Json = nlohmann::ordered_json;
  const GreenStructure green = green_classes(S);
  const EggBox box = eggbox(S, green);
  Json j = Json::object();
  j["format"] = "semilab-eggbox/1";
  Json d_list = Json::array();
  for (const EggBoxDClass& grid : box.d_classes) {
    Json jd = Json::object();
    jd["rows"] = grid.cells.size();
    jd["cols"] = grid.cells.front().size();
    jd["size"] = grid.element_count;
    Json cells = Json::array();
    for (const auto& row : grid.cells) {
      Json jrow = Json::array();
      for (const auto& cell : row) {
        Json jcell = Json::array();
        for (std::size_t x : cell) {
          Json e = Json::object();
          e["label"] = S.label(x);
          e["idempotent"] = static_cast<bool>(green.idempotent[x]);
          jcell.push_back(std::move(e));
        }
        jrow.push_back(std::move(jcell));
      }
      cells.push_back(std::move(jrow));
    }
    jd["cells"] = std::move(cells);
    d_list.push_back(std::move(jd));
  }
  j["d_classes"] = std::move(d_list);
  return j.dump(2) + "\n";
}

}  // namespace semilab
