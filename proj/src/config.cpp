#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "gk/verify.hpp"

namespace gk {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(trim(tok));
  return out;
}

const std::vector<std::string> kKeys = {"group", "preset", "t10-plus", "t10-minus", "field-d",
                                        "center-gram", "checks", "format", "cache", "timing"};

Matrix parse_gram(const std::string& text, int d) {
  std::vector<Vec> rows;
  for (const auto& row : split(text, ';')) {
    Vec r;
    for (const auto& tok : split(row, ',')) r.push_back(Scalar::parse(tok, d));
    rows.push_back(std::move(r));
  }
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw ConfigError("center-gram rows have different lengths");
  }
  return Matrix::from_rows(rows, cols);
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("expected a boolean, got '" + v + "'");
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(t.substr(0, eq));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    out[key] = trim(t.substr(eq + 1));
  }
  return out;
}

RunConfig config_from_keys(const std::map<std::string, std::string>& keys) {
  RunConfig c;
  auto get = [&](const std::string& k) -> std::optional<std::string> {
    auto it = keys.find(k);
    if (it == keys.end()) return std::nullopt;
    return it->second;
  };
  try {
    const auto group = get("group");
    if (!group || group->empty()) throw ConfigError("missing group spec");
    c.group_text = *group;
    c.spec = GroupSpec::parse(*group);
    if (auto d = get("field-d")) {
      std::size_t used = 0;
      const long v = std::stol(*d, &used);
      if (used != d->size()) throw ConfigError("malformed field-d '" + *d + "'");
      c.spec.field_d = static_cast<int>(v);
    }
    if (auto p = get("preset")) c.preset = parse_preset(*p);
    if (auto m = get("center-gram")) c.spec.center_gram = parse_gram(*m, c.spec.field_d);
    c.spec.validate();
    if (auto t = get("t10-plus")) c.t10_plus = *t;
    if (auto t = get("t10-minus")) c.t10_minus = *t;
    if (auto ch = get("checks")) {
      for (const auto& name : split(*ch, ',')) {
        if (name.empty()) continue;
        const auto& reg = check_registry();
        if (std::none_of(reg.begin(), reg.end(), [&](const CheckDef& d) { return d.name == name; })) {
          throw ConfigError("unknown check '" + name + "'");
        }
        c.checks.push_back(name);
      }
    }
    if (auto f = get("format")) {
      if (*f == "json") c.format = OutputFormat::Json;
      else if (*f == "text") c.format = OutputFormat::Text;
      else throw ConfigError("format must be json or text");
    }
    if (auto p = get("cache"); p && !p->empty()) c.cache_path = *p;
    if (auto t = get("timing")) c.timing = parse_bool(*t);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return c;
}

std::optional<RunConfig> parse_config(int argc, const char* const* argv, std::string* help_text) {
  CLI::App app{"Exact verification of Lie-algebraic generalized Kahler structures", "gkverify"};
  std::string group, config_file;
  app.add_option("group", group, "Group spec, e.g. A1,U1 or T2 or A2");
  app.add_option("--config", config_file, "key=value file; command-line flags take precedence");
  const std::vector<std::pair<std::string, std::string>> opts = {
      {"--preset", "canonical | induced-pair-1 | induced-pair-2 | opposite-borel"},
      {"--t10-plus", "Cartan coordinates of a t10 basis for l_+, 'c,c;c,c'"},
      {"--t10-minus", "Cartan coordinates of a t10 basis for l_-"},
      {"--field-d", "radicand d of Q(i)[sqrt d]"},
      {"--center-gram", "Gram matrix on the centre, rows separated by ';'"},
      {"--checks", "comma-separated subset of the check registry"},
      {"--format", "json | text"},
      {"--cache", "directory for the product-table cache"},
  };
  std::map<std::string, std::string> values;
  for (const auto& [flag, desc] : opts) app.add_option(flag, values[flag.substr(2)], desc);
  bool timing = false, list = false;
  app.add_flag("--timing", timing, "include per-check elapsed times");
  app.add_flag("--list-checks", list, "print the check registry and exit");
  app.set_version_flag("--version", std::string("gkverify ") + kToolVersion);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForVersion&) {
    if (help_text) *help_text = std::string("gkverify ") + kToolVersion + "\n";
    return std::nullopt;
  } catch (const CLI::Success&) {
    if (help_text) *help_text = app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  if (list) {
    if (help_text) {
      help_text->clear();
      for (const auto& c : check_registry()) *help_text += c.name + "  " + c.anchor + "\n";
    }
    return std::nullopt;
  }
  std::map<std::string, std::string> keys;
  if (!config_file.empty()) keys = read_config_file(config_file);
  if (!group.empty()) keys["group"] = group;
  for (const auto& [k, v] : values) {
    if (app.count("--" + k) > 0) keys[k] = v;
  }
  if (timing) keys["timing"] = "true";
  return config_from_keys(keys);
}

}  // namespace gk
