#include "fuzzynav/scenario_file.hpp"

#include <yaml-cpp/yaml.h>

#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace fuzzynav {

ScenarioError::ScenarioError(int line, const std::string& message)
    : ValidationError(line > 0 ? "line " + std::to_string(line) + ": " + message
                               : message),
      line_(line) {}

namespace {

int line_of(const YAML::Node& node) {
  const YAML::Mark mark = node.Mark();
  return mark.is_null() ? 0 : mark.line + 1;
}

// Rejects non-mapping nodes and keys outside `allowed`.
void expect_mapping(const YAML::Node& node, const std::string& where,
                    const std::set<std::string>& allowed) {
  if (!node.IsMap()) {
    throw ScenarioError(line_of(node), where + " must be a mapping");
  }
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.contains(key)) {
      std::string valid;
      for (const auto& a : allowed) valid += (valid.empty() ? "" : ", ") + a;
      throw ScenarioError(line_of(kv.first), "unknown key '" + key + "' in " +
                                                 where + " (allowed: " +
                                                 valid + ")");
    }
  }
}

class Reader {
 public:
  double number(const YAML::Node& node, const std::string& field) {
    lines_[field] = line_of(node);
    if (!node.IsScalar()) {
      throw ScenarioError(line_of(node), field + " must be a number");
    }
    try {
      return node.as<double>();
    } catch (const YAML::Exception&) {
      throw ScenarioError(line_of(node), field + " must be a number, got '" +
                                             node.Scalar() + "'");
    }
  }

  void optional_number(const YAML::Node& parent, const std::string& key,
                       const std::string& field, double& out) {
    if (const YAML::Node n = parent[key]) out = number(n, field);
  }

  int line_for_message(const std::string& message) const {
    int best = 0;
    std::size_t best_len = 0;
    for (const auto& [field, line] : lines_) {
      if (message.rfind(field, 0) == 0 && field.size() > best_len) {
        best = line;
        best_len = field.size();
      }
    }
    return best;
  }

  void remember(const std::string& field, int line) { lines_[field] = line; }

 private:
  std::map<std::string, int> lines_;
};

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

}  // namespace

Scenario parse_scenario(std::string_view text,
                        const std::filesystem::path& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ScenarioError(e.mark.is_null() ? 0 : e.mark.line + 1, e.msg);
  }
  if (!root || root.IsNull()) throw ScenarioError(0, "empty scenario document");
  expect_mapping(root, "scenario",
                 {"start", "goal", "dt", "max_time", "goal_tol", "angle_tol",
                  "params", "controller"});

  Scenario sc;
  Reader reader;
  if (const YAML::Node start = root["start"]) {
    expect_mapping(start, "start", {"x", "y", "theta"});
    reader.remember("start", line_of(start));
    reader.optional_number(start, "x", "start.x", sc.start.x);
    reader.optional_number(start, "y", "start.y", sc.start.y);
    reader.optional_number(start, "theta", "start.theta", sc.start.theta);
  }
  const YAML::Node goal = root["goal"];
  if (!goal) throw ScenarioError(0, "missing required key 'goal'");
  expect_mapping(goal, "goal", {"x", "y"});
  reader.remember("goal", line_of(goal));
  for (const char* axis : {"x", "y"}) {
    if (!goal[axis]) {
      throw ScenarioError(line_of(goal),
                          std::string("goal is missing '") + axis + "'");
    }
  }
  sc.goal.x = reader.number(goal["x"], "goal.x");
  sc.goal.y = reader.number(goal["y"], "goal.y");

  reader.optional_number(root, "dt", "dt", sc.dt);
  reader.optional_number(root, "max_time", "max_time", sc.max_time);
  reader.optional_number(root, "goal_tol", "goal_tol", sc.goal_tol);
  reader.optional_number(root, "angle_tol", "angle_tol", sc.angle_tol);

  if (const YAML::Node params = root["params"]) {
    expect_mapping(params, "params", {"wheel_base", "wheel_radius", "v_max"});
    reader.optional_number(params, "wheel_base", "params.wheel_base",
                           sc.params.wheel_base);
    reader.optional_number(params, "wheel_radius", "params.wheel_radius",
                           sc.params.wheel_radius);
    reader.optional_number(params, "v_max", "params.v_max", sc.params.v_max);
  }

  if (const YAML::Node controller = root["controller"]) {
    if (!controller.IsScalar()) {
      throw ScenarioError(line_of(controller),
                          "controller must be 3, 5, 7 or a rules file path");
    }
    try {
      sc.controller = parse_controller(controller.Scalar(), base_dir);
    } catch (const ValidationError& e) {
      throw ScenarioError(line_of(controller), e.what());
    }
  }

  try {
    check_scenario(sc);
  } catch (const ValidationError& e) {
    throw ScenarioError(reader.line_for_message(e.what()), e.what());
  }
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(0, "cannot read scenario file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str(), path.parent_path());
}

std::string render_scenario(const Scenario& sc) {
  std::ostringstream out;
  out << "start: {x: " << format_number(sc.start.x)
      << ", y: " << format_number(sc.start.y)
      << ", theta: " << format_number(sc.start.theta) << "}\n"
      << "goal: {x: " << format_number(sc.goal.x)
      << ", y: " << format_number(sc.goal.y) << "}\n"
      << "dt: " << format_number(sc.dt) << "\n"
      << "max_time: " << format_number(sc.max_time) << "\n"
      << "goal_tol: " << format_number(sc.goal_tol) << "\n"
      << "angle_tol: " << format_number(sc.angle_tol) << "\n"
      << "params: {wheel_base: " << format_number(sc.params.wheel_base)
      << ", wheel_radius: " << format_number(sc.params.wheel_radius)
      << ", v_max: " << format_number(sc.params.v_max) << "}\n"
      << "controller: ";
  if (std::holds_alternative<RuleSetSize>(sc.controller)) {
    out << controller_name(sc.controller) << "\n";
  } else {
    YAML::Emitter quoted;
    quoted << YAML::DoubleQuoted << controller_name(sc.controller);
    out << quoted.c_str() << "\n";
  }
  return out.str();
}

}  // namespace fuzzynav
