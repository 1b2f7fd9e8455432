// Copyright 2026 The anyonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anyon/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace anyon {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    tok = strip(tok);
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

}  // namespace

Word free_reduce(Word w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

GroupPresentation::GroupPresentation(std::vector<std::string> gens,
                                     std::vector<Word> relators)
    : gens_(std::move(gens)) {
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] == gens_[j])
        throw std::invalid_argument("duplicate generator name: " + gens_[i]);
  for (auto& r : relators) {
    for (int letter : r) {
      if (letter == 0 || static_cast<size_t>(std::abs(letter)) > gens_.size())
        throw std::invalid_argument("relator letter out of range");
    }
    relators_.push_back(free_reduce(std::move(r)));
  }
}

Word GroupPresentation::parse_word(const std::string& text) const {
  Word w;
  for (const auto& term : split(text, '*')) {
    std::string name = term;
    long expo = 1;
    size_t caret = term.find('^');
    if (caret != std::string::npos) {
      name = strip(term.substr(0, caret));
      std::string e = strip(term.substr(caret + 1));
      try {
        expo = std::stol(e);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in word term: " + term);
      }
    }
    auto it = std::find(gens_.begin(), gens_.end(), name);
    if (it == gens_.end())
      throw std::invalid_argument("unknown generator: " + name);
    int idx = static_cast<int>(it - gens_.begin()) + 1;
    int letter = expo >= 0 ? idx : -idx;
    for (long k = 0; k < std::labs(expo); ++k) w.push_back(letter);
  }
  return free_reduce(w);
}

std::string GroupPresentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long run = static_cast<long>(j - i);
    if (!out.empty()) out += "*";
    out += gens_[std::abs(w[i]) - 1];
    long expo = w[i] > 0 ? run : -run;
    if (expo != 1) out += "^" + std::to_string(expo);
    i = j;
  }
  return out;
}

GroupPresentation GroupPresentation::from_text(const std::string& text) {
  std::vector<std::string> gens;
  std::string rel_block;
  std::istringstream in(text);
  std::string line;
  bool in_rels = false;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string s = strip(line);
    if (s.empty()) continue;
    if (s.rfind("gens:", 0) == 0) {
      gens = split(s.substr(5), ',');
      in_rels = false;
    } else if (s.rfind("rels:", 0) == 0) {
      rel_block += s.substr(5);
      in_rels = true;
    } else if (in_rels) {
      rel_block += "," + s;  // continuation lines
    } else {
      throw std::invalid_argument("unexpected presentation line: " + s);
    }
  }
  if (gens.empty()) throw std::invalid_argument("presentation has no gens: line");
  GroupPresentation p(gens, {});
  std::vector<Word> rels;
  for (const auto& r : split(rel_block, ',')) rels.push_back(p.parse_word(r));
  return GroupPresentation(gens, rels);
}

std::string GroupPresentation::to_text() const {
  std::string out = "gens: ";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i];
  }
  out += "\nrels: ";
  for (size_t i = 0; i < relators_.size(); ++i) {
    if (i) out += ", ";
    out += word_to_string(relators_[i]);
  }
  out += "\n";
  return out;
}

GroupPresentation GroupPresentation::with_relator_order(
    const std::vector<std::size_t>& perm) const {
  if (perm.size() != relators_.size())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<Word> rels;
  for (std::size_t i : perm) rels.push_back(relators_.at(i));
  return GroupPresentation(gens_, rels);
}

Report check_relations(const GroupPresentation& p,
                       const std::map<std::string, ExactMatrix>& assignment) {
  std::vector<ExactMatrix> mats, invs;
  for (const auto& g : p.generators()) {
    auto it = assignment.find(g);
    if (it == assignment.end())
      throw std::invalid_argument("no matrix assigned to generator " + g);
    mats.push_back(it->second);
    invs.push_back(it->second.inverse());
  }
  Report report;
  report.suite = "relations";
  for (const auto& rel : p.relators()) {
    ExactMatrix acc = ExactMatrix::identity(mats[0].dim(), mats[0].order());
    for (int letter : rel)
      acc = acc * (letter > 0 ? mats[letter - 1] : invs[-letter - 1]);
    report.add(p.word_to_string(rel), acc.is_identity());
  }
  return report;
}

GroupPresentation qutrit_gate_group_presentation() {
  GroupPresentation scaffold({"x6", "x18", "t1", "t2"}, {});
  std::vector<std::string> rels = {
      "t1^2",
      "t2^2",
      "x6^6",
      "x18^18",
      "x6^-1*x18^-1*x6*x18",
      "t1*t2*t1*t2*t1*t2",
      "t1*x6*t1*x6",
      "t1*x18*t1*x18^-1*x6^-3",
      "t2*x6*t2*x18^-3*x6^-5",
      "t2*x18*t2*x18^-13*x6^-4",
  };
  std::vector<Word> words;
  for (const auto& r : rels) words.push_back(scaffold.parse_word(r));
  return GroupPresentation({"x6", "x18", "t1", "t2"}, words);
}

}  // namespace anyon
