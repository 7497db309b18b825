#include "hexmg/converse.hpp"

#include <algorithm>
#include <stdexcept>

namespace hexmg {

namespace {

std::string q_label(const std::string& from, const std::string& to, int j) {
  return "Q[" + from + "->" + to + "]#" + std::to_string(j);
}

std::string t_label(const std::string& from, const std::string& to, int j) {
  return "T[" + from + "->" + to + "]#" + std::to_string(j);
}

void check_budgets(int D_t, int D_r) {
  if (D_t < 0 || D_r < 0) throw std::invalid_argument("conferencing budgets must be non-negative");
}

// Colour pairs exchanged while only red, pink and white outputs are known.
const std::vector<std::pair<std::string, std::string>>& four_color_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs{
      {"white", "pink"}, {"pink", "white"}, {"red", "pink"}, {"pink", "red"}, {"pink", "pink"}, {"white", "white"}};
  return pairs;
}

}  // namespace

std::string to_string(Color c) {
  switch (c) {
    case Color::RED: return "RED";
    case Color::WHITE: return "WHITE";
    case Color::PINK: return "PINK";
    case Color::BLUE: return "BLUE";
  }
  return "?";
}

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::RX_CONF: return "RX_CONF";
    case StepKind::TX_CONF: return "TX_CONF";
    case StepKind::DECODE: return "DECODE";
    case StepKind::ENCODE: return "ENCODE";
    case StepKind::RECONSTRUCT: return "RECONSTRUCT";
  }
  return "?";
}

long long Partition::count(Color c) const {
  auto it = census.find(c);
  return it == census.end() ? 0 : it->second;
}

std::vector<Color> colors_of(PartitionKind kind) {
  if (kind == PartitionKind::TWO_COLOR) return {Color::RED, Color::WHITE};
  return {Color::RED, Color::BLUE, Color::PINK, Color::WHITE};
}

Rational limit_fraction(PartitionKind kind, int D, Color c) {
  if (kind == PartitionKind::TWO_COLOR) {
    if (c == Color::RED || c == Color::WHITE) return Rational(1, 2);
    return 0;
  }
  Rational n = Rational(D) * D + D + 1;
  switch (c) {
    case Color::RED:
    case Color::BLUE: return 1 / (2 * n);
    case Color::PINK: return 3 / n;
    case Color::WHITE: return (n - 4) / n;
  }
  return 0;
}

Partition partition_two(const Network& net) {
  Partition p;
  p.kind = PartitionKind::TWO_COLOR;
  p.net = net;
  for (const auto& c : net.cells()) {
    Color col = (c.q % 2 == 0) ? Color::RED : Color::WHITE;
    p.coloring[c] = col;
    ++p.census[col];
  }
  return p;
}

bool four_color_lattice_point(CellCoord c, int D, long long* a, long long* b) {
  long long n = 1LL * D * D + D + 1;
  long long an = 1LL * (D + 1) * c.q + c.r;
  long long bn = 1LL * D * c.r - c.q;
  if (an % n != 0 || bn % n != 0) return false;
  if (a) *a = an / n;
  if (b) *b = bn / n;
  return true;
}

Partition partition_four(const Network& net, int D) {
  if (D < 2) throw std::invalid_argument("four-colour partition needs D >= 2");
  if (net.radius() < 3 * D)
    throw std::invalid_argument("four-colour partition needs radius >= " + std::to_string(3 * D));
  Partition p;
  p.kind = PartitionKind::FOUR_COLOR;
  p.D = D;
  p.net = net;
  auto is_red = [D](CellCoord c) {
    long long a = 0, b = 0;
    return four_color_lattice_point(c, D, &a, &b) && (a + b) % 2 == 0;
  };
  for (const auto& c : net.cells()) {
    long long a = 0, b = 0;
    Color col = Color::WHITE;
    if (four_color_lattice_point(c, D, &a, &b)) {
      col = (a + b) % 2 == 0 ? Color::RED : Color::BLUE;
    } else {
      for (const auto& d : kHexDirs)
        if (is_red(c + d)) {
          col = Color::PINK;
          break;
        }
    }
    p.coloring[c] = col;
    ++p.census[col];
  }
  return p;
}

SchedulePlan schedule_algorithm1(const Partition& p, int D_t, int D_r, int D) {
  if (p.kind != PartitionKind::TWO_COLOR) throw std::invalid_argument("algorithm 1 runs on the red/white partition");
  check_budgets(D_t, D_r);
  SchedulePlan plan;
  plan.algorithm = "1";
  plan.D_t = D_t;
  plan.D_r = D_r;
  plan.D = D < 0 ? D_t + D_r : D;
  plan.initial = {"Y_red", "G"};
  for (int j = 1; j <= D_r; ++j) plan.initial.insert(q_label("white", "red", j));
  for (int j = 1; j <= D_t; ++j) plan.initial.insert(t_label("white", "red", j));

  for (int j = 1; j <= D_r; ++j) {
    Step s{StepKind::RX_CONF, 1, j, {"Y_red"}, {q_label("red", "red", j)}, "red receivers confer"};
    for (int i = 1; i < j; ++i) {
      s.consumes.insert(q_label("white", "red", i));
      s.consumes.insert(q_label("red", "red", i));
    }
    plan.steps.push_back(s);
  }
  {
    Step s{StepKind::DECODE, 2, 0, {"Y_red"}, {"M_red"}, "decode red messages"};
    for (int j = 1; j <= D_r; ++j) {
      s.consumes.insert(q_label("white", "red", j));
      s.consumes.insert(q_label("red", "red", j));
    }
    plan.steps.push_back(s);
  }
  for (int j = 1; j <= D_t; ++j) {
    Step s{StepKind::TX_CONF, 3, j, {"M_red"}, {t_label("red", "red", j)}, "red transmitters confer"};
    for (int i = 1; i < j; ++i) {
      s.consumes.insert(t_label("white", "red", i));
      s.consumes.insert(t_label("red", "red", i));
    }
    plan.steps.push_back(s);
  }
  {
    Step s{StepKind::ENCODE, 4, 0, {"M_red"}, {"X_red"}, "re-encode red inputs"};
    for (int j = 1; j <= D_t; ++j) {
      s.consumes.insert(t_label("white", "red", j));
      s.consumes.insert(t_label("red", "red", j));
    }
    plan.steps.push_back(s);
    plan.steps.push_back({StepKind::RECONSTRUCT, 4, 0, {"X_red", "Y_red", "G"}, {"Y_white"}, "rebuild white outputs"});
  }
  for (int j = 1; j <= D_r; ++j) {
    Step s{StepKind::RX_CONF,
           5,
           j,
           {"Y_white", "Y_red"},
           {q_label("red", "white", j), q_label("white", "white", j)},
           "white receivers confer"};
    for (int i = 1; i < j; ++i) {
      s.consumes.insert(q_label("red", "white", i));
      s.consumes.insert(q_label("white", "white", i));
    }
    plan.steps.push_back(s);
  }
  {
    Step s{StepKind::DECODE, 5, 0, {"Y_white"}, {"M_white"}, "decode white messages"};
    for (int j = 1; j <= D_r; ++j) {
      s.consumes.insert(q_label("red", "white", j));
      s.consumes.insert(q_label("white", "white", j));
    }
    plan.steps.push_back(s);
  }
  plan.claims = {"M_red", "M_white"};
  return plan;
}

SchedulePlan schedule_algorithm2(const Partition& p, int D_t, int D_r) {
  if (p.kind != PartitionKind::FOUR_COLOR) throw std::invalid_argument("algorithm 2 runs on the four-colour partition");
  check_budgets(D_t, D_r);
  SchedulePlan plan;
  plan.algorithm = "2";
  plan.D_t = D_t;
  plan.D_r = D_r;
  plan.D = p.D;
  plan.initial = {"Y_red", "Y_pink", "Y_white", "G"};

  for (int j = 1; j <= D_r; ++j) {
    Step s{StepKind::RX_CONF, 1, j, {"Y_red", "Y_pink", "Y_white"}, {}, "red, pink and white receivers confer"};
    for (const auto& [from, to] : four_color_pairs()) {
      s.produces.insert(q_label(from, to, j));
      for (int i = 1; i < j; ++i) s.consumes.insert(q_label(from, to, i));
    }
    plan.steps.push_back(s);
  }
  {
    Step s{StepKind::DECODE, 2, 0, {"Y_red"}, {"M_red"}, "decode red messages"};
    for (int j = 1; j <= D_r; ++j) s.consumes.insert(q_label("pink", "red", j));
    plan.steps.push_back(s);
  }
  for (int j = 1; j <= D_t; ++j) {
    Step s{StepKind::TX_CONF, 3, j, {"M_red"}, {}, "transmitters confer"};
    for (const auto& [from, to] : four_color_pairs()) {
      s.produces.insert(t_label(from, to, j));
      for (int i = 1; i < j; ++i) s.consumes.insert(t_label(from, to, i));
    }
    plan.steps.push_back(s);
  }
  {
    Step s{StepKind::ENCODE, 4, 0, {"M_red"}, {"X_red"}, "re-encode red inputs"};
    for (int j = 1; j <= D_t; ++j) s.consumes.insert(t_label("pink", "red", j));
    plan.steps.push_back(s);
    plan.steps.push_back({StepKind::RECONSTRUCT,
                          4,
                          0,
                          {"X_red", "Y_red", "Y_pink", "Y_white", "G"},
                          {"Y_blue"},
                          "rebuild blue outputs"});
  }
  for (int j = 1; j <= D_r; ++j) {
    Step s{StepKind::RX_CONF, 5, j, {"Y_red", "Y_pink", "Y_white", "Y_blue"}, {"Q[all]#" + std::to_string(j)},
           "all receivers confer"};
    for (int i = 1; i < j; ++i) s.consumes.insert("Q[all]#" + std::to_string(i));
    plan.steps.push_back(s);
  }
  {
    Step s{StepKind::DECODE, 5, 0, {"Y_pink", "Y_white", "Y_blue"}, {"M_pink", "M_white", "M_blue"},
           "decode remaining messages"};
    for (int j = 1; j <= D_r; ++j) s.consumes.insert("Q[all]#" + std::to_string(j));
    plan.steps.push_back(s);
  }
  plan.claims = {"M_red", "M_pink", "M_white", "M_blue"};
  return plan;
}

bool ValidationReport::has(char rule) const {
  return std::any_of(violations.begin(), violations.end(), [rule](const Violation& v) { return v.rule == rule; });
}

ValidationReport validate_schedule(const SchedulePlan& plan) {
  ValidationReport rep;
  if (plan.D_t + plan.D_r > plan.D)
    rep.violations.push_back({'d', -1,
                              "D_t + D_r = " + std::to_string(plan.D_t + plan.D_r) + " exceeds D = " +
                                  std::to_string(plan.D)});

  std::map<std::pair<int, StepKind>, std::set<int>> seen;
  std::set<std::string> avail = plan.initial;
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const Step& s = plan.steps[i];
    int idx = static_cast<int>(i);
    if (s.kind == StepKind::RX_CONF || s.kind == StepKind::TX_CONF) {
      int budget = s.kind == StepKind::RX_CONF ? plan.D_r : plan.D_t;
      if (s.round_index < 1 || s.round_index > budget)
        rep.violations.push_back({'b', idx,
                                  to_string(s.kind) + " round " + std::to_string(s.round_index) + " outside [1, " +
                                      std::to_string(budget) + "]"});
      if (!seen[{s.phase, s.kind}].insert(s.round_index).second)
        rep.violations.push_back({'b', idx,
                                  to_string(s.kind) + " round " + std::to_string(s.round_index) +
                                      " repeated in phase " + std::to_string(s.phase)});
    }
    std::vector<std::string> missing;
    for (const auto& label : s.consumes)
      if (!avail.count(label)) missing.push_back(label);
    if (!missing.empty()) {
      std::string detail = to_string(s.kind) + " is missing";
      for (const auto& m : missing) detail += " " + m;
      rep.violations.push_back({'a', idx, detail});
      continue;
    }
    avail.insert(s.produces.begin(), s.produces.end());
  }
  for (const auto& c : plan.claims)
    if (!avail.count(c)) rep.violations.push_back({'c', -1, "claimed " + c + " is never decoded"});
  rep.final_resources = std::move(avail);
  rep.ok = rep.violations.empty();
  return rep;
}

Rational bound_arithmetic(const Partition& p, const SystemParams& params) {
  Rational K(p.total());
  if (K == 0) throw std::invalid_argument("empty partition");
  Rational M(params.M);
  if (p.kind == PartitionKind::TWO_COLOR) {
    Rational red(p.count(Color::RED));
    return (3 * M * red + 4 * (K - red) * (params.mu_rx + 2 * params.mu_tx)) / (3 * K);
  }
  return M * (1 - Rational(p.count(Color::BLUE)) / K);
}

Rational bound_limit(PartitionKind kind, const SystemParams& params, int D) {
  Rational M(params.M);
  if (kind == PartitionKind::TWO_COLOR) return M / 2 + (2 * params.mu_rx + 4 * params.mu_tx) / 3;
  Rational n = Rational(D) * D + D + 1;
  return M * (1 - 1 / (2 * n));
}

}  // namespace hexmg
