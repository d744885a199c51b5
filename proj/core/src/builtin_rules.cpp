#include <array>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzynav/rule_base.hpp"

namespace fuzzynav {

namespace {

// Reference grids: one row per angle term (in table row order), one
// column per distance term (in table column order, far to near).
struct ReferenceGrid {
  std::vector<std::string> rows;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> right;
  std::vector<std::vector<std::string>> left;
};

const ReferenceGrid& three_term_grid() {
  static const ReferenceGrid grid{
      {"N", "Z", "P"},
      {"F", "M", "Z"},
      {
          {"M", "M", "S"},
          {"F", "M", "S"},
          {"F", "F", "F"},
      },
      {
          {"F", "F", "M"},
          {"F", "M", "S"},
          {"M", "M", "S"},
      },
  };
  return grid;
}

const ReferenceGrid& five_term_grid() {
  static const ReferenceGrid grid{
      {"SN", "N", "Z", "P", "BP"},
      {"VF", "F", "M", "N", "Z"},
      {
          {"M", "S", "VS", "VS", "VS"},
          {"F", "M", "S", "VS", "VS"},
          {"VF", "F", "M", "S", "VS"},
          {"VF", "F", "M", "S", "S"},
          {"VF", "F", "F", "M", "M"},
      },
      {
          {"VF", "F", "F", "M", "M"},
          {"VF", "F", "M", "S", "S"},
          {"VF", "F", "M", "S", "VS"},
          {"F", "M", "S", "VS", "VS"},
          {"M", "S", "VS", "VS", "VS"},
      },
  };
  return grid;
}

// Cells are kept exactly as printed; the bare "VF" that appears in two
// cells is mapped to VF1 ("Very Fast") by normalize_seven_term_label.
const ReferenceGrid& seven_term_grid() {
  static const ReferenceGrid grid{
      {"VSN", "SN", "N", "Z", "P", "BP", "VBP"},
      {"VBP", "VF", "F", "M", "N", "VNZ", "Z"},
      {
          {"M", "F", "S", "VS1", "VS1", "VS2", "VS2"},
          {"F", "M", "S", "VS1", "VS1", "VS1", "VS2"},
          {"VF1", "F", "M", "S", "VS1", "VS1", "VS2"},
          {"VF2", "VF1", "F", "M", "S", "VS1", "VS2"},
          {"VF2", "VF1", "F", "M", "S", "S", "VS1"},
          {"VF2", "VF1", "F", "F", "M", "M", "S"},
          {"VF2", "VF2", "VF", "F", "M", "M", "S"},
      },
      {
          {"VF2", "VF2", "VF", "F", "M", "M", "S"},
          {"VF2", "VF1", "F", "F", "M", "M", "S"},
          {"VF2", "VF1", "F", "M", "S", "S", "VS1"},
          {"VF2", "VF1", "F", "M", "S", "VS1", "VS2"},
          {"VF1", "F", "M", "S", "VS1", "VS1", "VS2"},
          {"F", "M", "S", "VS1", "VS1", "VS1", "VS2"},
          {"M", "F", "S", "VS1", "VS1", "VS2", "VS2"},
      },
  };
  return grid;
}

std::string normalize_seven_term_label(const std::string& label) {
  return label == "VF" ? "VF1" : label;
}

const ReferenceGrid& grid_for(RuleSetSize size) {
  switch (size) {
    case RuleSetSize::Three:
      return three_term_grid();
    case RuleSetSize::Five:
      return five_term_grid();
    case RuleSetSize::Seven:
      break;
  }
  return seven_term_grid();
}

}  // namespace

BuiltinLabels builtin_labels(RuleSetSize size) {
  const ReferenceGrid& grid = grid_for(size);
  BuiltinLabels labels;
  labels.angle = grid.rows;
  labels.distance.assign(grid.columns.rbegin(), grid.columns.rend());
  switch (size) {
    case RuleSetSize::Three:
      labels.speed = {"S", "M", "F"};
      break;
    case RuleSetSize::Five:
      labels.speed = {"VS", "S", "M", "F", "VF"};
      break;
    case RuleSetSize::Seven:
      labels.speed = {"VS2", "VS1", "S", "M", "F", "VF1", "VF2"};
      break;
  }
  return labels;
}

RuleBase builtin(RuleSetSize size, const DefaultLayout& layout) {
  const BuiltinLabels labels = builtin_labels(size);
  const Universe angle_universe{-std::numbers::pi, std::numbers::pi};
  const Universe distance_universe{0.0, layout.max_distance};
  const Universe speed_universe{0.0, layout.max_speed};

  RuleBase rb{
      uniform_partition("angle", angle_universe, labels.angle),
      uniform_partition("distance", distance_universe, labels.distance),
      uniform_partition("right", speed_universe, labels.speed),
      uniform_partition("left", speed_universe, labels.speed),
      {},
  };

  const ReferenceGrid& grid = grid_for(size);
  auto output = [&](const std::string& label) {
    return size == RuleSetSize::Seven ? normalize_seven_term_label(label)
                                      : label;
  };
  for (std::size_t r = 0; r < grid.rows.size(); ++r) {
    for (std::size_t c = 0; c < grid.columns.size(); ++c) {
      rb.rules.push_back(Rule{grid.rows[r], grid.columns[c],
                              output(grid.right[r][c]),
                              output(grid.left[r][c])});
    }
  }
  sort_rules(rb);
  return rb;
}

}  // namespace fuzzynav
