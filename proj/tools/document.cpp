/*
 * Copyright 2026 The pbnphi Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "document.hpp"

#include "pbnphi/error.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace pbnphi::io {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

// Splits on whitespace; ':' and '=' are tokens of their own. Stops at '#'.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == ':' || c == '=') {
      tokens.push_back({std::string(1, c), static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != ':' &&
           line[i] != '=' && line[i] != '#') {
      ++i;
    }
    tokens.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return tokens;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-')) return false;
  }
  return true;
}

[[noreturn]] void syntax_error(int line, int column, const std::string& message) {
  throw ValidationError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

bool parse_real(const std::string& text, double& value) {
  std::istringstream is(text);
  is.imbue(std::locale::classic());
  is >> value;
  return !is.fail() && is.eof();
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Declaration {
  std::string name;
  int line = 0;
  std::vector<Token> inputs;
  std::vector<double> table;
};

}  // namespace

Network parse_network(std::string_view document, int max_nodes) {
  std::vector<Declaration> decls;
  std::map<std::string, int> ids;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= document.size()) {
    const std::size_t end = std::min(document.find('\n', pos), document.size());
    const std::string_view line = document.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0].text != "node") syntax_error(line_no, tokens[0].column, "expected 'node', found '" + tokens[0].text + "'");
    if (tokens.size() < 2) syntax_error(line_no, static_cast<int>(line.size()) + 1, "expected a node name");
    Declaration decl{tokens[1].text, line_no, {}, {}};
    if (!valid_name(decl.name)) syntax_error(line_no, tokens[1].column, "invalid node name '" + decl.name + "'");
    if (tokens.size() < 3 || tokens[2].text != ":") {
      syntax_error(line_no, tokens.size() < 3 ? static_cast<int>(line.size()) + 1 : tokens[2].column, "expected ':' after the node name");
    }
    std::size_t k = 3;
    for (; k < tokens.size() && tokens[k].text != "="; ++k) {
      if (!valid_name(tokens[k].text)) syntax_error(line_no, tokens[k].column, "invalid input name '" + tokens[k].text + "'");
      decl.inputs.push_back(tokens[k]);
    }
    if (k == tokens.size()) syntax_error(line_no, static_cast<int>(line.size()) + 1, "expected '=' before the probability table");
    for (++k; k < tokens.size(); ++k) {
      double v = 0.0;
      if (!parse_real(tokens[k].text, v)) syntax_error(line_no, tokens[k].column, "'" + tokens[k].text + "' is not a number");
      decl.table.push_back(v);
    }
    if (decl.table.empty()) syntax_error(line_no, static_cast<int>(line.size()) + 1, "empty probability table");
    if (!ids.try_emplace(decl.name, static_cast<int>(decls.size()) + 1).second) {
      syntax_error(line_no, tokens[1].column, "node '" + decl.name + "' declared twice");
    }
    decls.push_back(std::move(decl));
    if (end == document.size()) break;
  }

  Network net;
  for (std::size_t d = 0; d < decls.size(); ++d) {
    NodeLaw law;
    law.node_id = static_cast<int>(d) + 1;
    for (const Token& input : decls[d].inputs) {
      auto it = ids.find(input.text);
      if (it == ids.end()) syntax_error(decls[d].line, input.column, "unknown input node '" + input.text + "'");
      law.inputs.push_back(it->second);
    }
    law.table = decls[d].table;
    net.laws.push_back(std::move(law));
    net.names.push_back(decls[d].name);
  }
  try {
    validate_network(net, max_nodes);
  } catch (const ValidationError& e) {
    // Map "node k: ..." back to its declaration line.
    std::string message = e.what();
    for (std::size_t d = 0; d < decls.size(); ++d) {
      const std::string prefix = "node " + std::to_string(d + 1) + ":";
      if (message.rfind(prefix, 0) == 0) {
        message = "line " + std::to_string(decls[d].line) + ": node '" + decls[d].name + "'" + message.substr(prefix.size() - 1);
        break;
      }
    }
    throw ValidationError(message);
  }
  return net;
}

std::string serialize_network(const Network& net) {
  auto name_of = [&](int id) {
    const auto idx = static_cast<std::size_t>(id - 1);
    return idx < net.names.size() && !net.names[idx].empty() ? net.names[idx] : "n" + std::to_string(id);
  };
  std::vector<const NodeLaw*> ordered(net.laws.size(), nullptr);
  for (const NodeLaw& law : net.laws) ordered.at(static_cast<std::size_t>(law.node_id - 1)) = &law;

  std::string out = "# pbnphi network\n";
  for (const NodeLaw* law : ordered) {
    out += "node " + name_of(law->node_id) + " :";
    for (int input : law->inputs) out += " " + name_of(input);
    out += " =";
    for (double r : law->table) out += " " + format_real(r);
    out += "\n";
  }
  return out;
}

Distribution parse_distribution(std::string_view text, Eigen::Index size) {
  std::vector<double> values;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const auto tokens = tokenize(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    for (const Token& token : tokens) {
      double v = 0.0;
      if (!parse_real(token.text, v)) syntax_error(line_no, token.column, "'" + token.text + "' is not a number");
      values.push_back(v);
    }
  }
  Distribution p(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) p(static_cast<Eigen::Index>(i)) = values[i];
  check_distribution(p, size, "prior distribution");
  return p;
}

StateIndex parse_state(std::string_view bits, int n) {
  if (static_cast<int>(bits.size()) != n) {
    throw UsageError("state '" + std::string(bits) + "' must have exactly " + std::to_string(n) + " bits");
  }
  StateIndex x = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw UsageError("state '" + std::string(bits) + "' must contain only 0 and 1");
    x = (x << 1) | static_cast<StateIndex>(c - '0');
  }
  return x;
}

std::string format_state(StateIndex x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int k = 0; k < n; ++k) {
    if ((x >> k) & 1u) s[static_cast<std::size_t>(n - 1 - k)] = '1';
  }
  return s;
}

std::string network_hash(const Network& net) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : serialize_network(net)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pbnphi::io
