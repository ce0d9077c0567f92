// Copyright 2026 The horoteich Authors
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


#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "horoteich/kernel.hpp"

namespace horoteich::cli {

/// Expands "--config FILE" into command-line arguments. The file is an INI
/// table with an optional [origami] section (n, h, v) and a [job] section
/// whose "subcommand" key names the command and whose other keys become
/// "--key=value" options. Explicit arguments follow the expansion and win.
inline std::vector<std::string> expand_config(const std::vector<std::string>& args,
                                              const std::set<std::string>& subcommands) {
  std::vector<std::string> rest;
  std::string path;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config") {
      if (k + 1 >= args.size()) throw InvalidInput("--config needs a file path");
      path = args[++k];
    } else if (args[k].rfind("--config=", 0) == 0) {
      path = args[k].substr(9);
    } else {
      rest.push_back(args[k]);
    }
  }
  if (path.empty()) return args;

  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw InvalidInput("cannot read config '" + path + "': " + e.message());
  }
  std::vector<std::string> injected;
  std::string sub;
  if (const auto job = tree.get_child_optional("job")) {
    for (const auto& [key, value] : *job) {
      if (key == "subcommand") {
        sub = value.data();
      } else {
        injected.push_back("--" + key + "=" + value.data());
      }
    }
  }
  if (const auto ori = tree.get_child_optional("origami")) {
    for (const auto& [key, value] : *ori) {
      if (key != "n" && key != "h" && key != "v") throw InvalidInput("unknown [origami] key '" + key + "'");
      injected.push_back("--" + key + "=" + value.data());
    }
  }
  for (const auto& [section, child] : tree) {
    if (section != "job" && section != "origami") throw InvalidInput("unknown config section [" + section + "]");
    (void)child;
  }

  // Place the injected options right after the subcommand token.
  std::vector<std::string> out;
  auto it = std::find_if(rest.begin() + (rest.empty() ? 0 : 1), rest.end(),
                         [&](const std::string& a) { return subcommands.count(a) > 0; });
  if (it == rest.end()) {
    if (sub.empty()) throw InvalidInput("config has no [job] subcommand and none was given");
    if (!subcommands.count(sub)) throw InvalidInput("unknown subcommand '" + sub + "' in config");
    out.assign(rest.begin(), rest.begin() + (rest.empty() ? 0 : 1));
    if (out.empty()) out.push_back("horoteich");
    out.push_back(sub);
    out.insert(out.end(), injected.begin(), injected.end());
    out.insert(out.end(), rest.begin() + (rest.empty() ? 0 : 1), rest.end());
  } else {
    out.assign(rest.begin(), it + 1);
    out.insert(out.end(), injected.begin(), injected.end());
    out.insert(out.end(), it + 1, rest.end());
  }
  return out;
}

}  // namespace horoteich::cli
