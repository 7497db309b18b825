#include "hexmg/emit.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <tuple>

namespace hexmg {

std::string format_sci(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits, x);
  return buf;
}

void write_lattice_csv(std::ostream& os, const Network& net) {
  os << "sector_cell_q,sector_cell_r,orientation,neighbor_cell_q,neighbor_cell_r,neighbor_orientation\n";
  // Sectors and their neighbor lists are already sorted, so rows come out in order.
  for (const auto& k : net.sectors())
    for (const auto& l : net.tx_neighbors(k))
      os << k.cell.q << ',' << k.cell.r << ',' << k.orientation << ',' << l.cell.q << ',' << l.cell.r << ','
         << l.orientation << '\n';
}

void write_cluster_csv(std::ostream& os, const ClusterPlan& plan) {
  os << "cell_q,cell_r,orientation,role,cluster_id\n";
  for (const auto& s : plan.net.sectors()) {
    std::string role;
    int id = -1;
    if (plan.silenced.count(s)) {
      role = "SILENT";
    } else {
      id = plan.cluster_of.at(s);
      if (plan.cluster(id).master_user == s)
        role = "MASTER";
      else
        role = plan.mode == AssignMode::NONE ? "SLOW" : to_string(plan.role(s));
    }
    os << s.cell.q << ',' << s.cell.r << ',' << s.orientation << ',' << role << ',' << id << '\n';
  }
}

void write_region_csv(std::ostream& os, const std::vector<NamedCurve>& curves) {
  os << "bound,sf,ss\n";
  for (const auto& c : curves)
    for (const auto& p : c.points) os << c.name << ',' << to_decimal(p.sf) << ',' << to_decimal(p.ss) << '\n';
}

void write_region_json(std::ostream& os, const std::vector<NamedCurve>& curves) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& c : curves) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : c.points) {
      nlohmann::ordered_json pt;
      pt["sf"] = {boost::multiprecision::numerator(p.sf).str(), boost::multiprecision::denominator(p.sf).str()};
      pt["ss"] = {boost::multiprecision::numerator(p.ss).str(), boost::multiprecision::denominator(p.ss).str()};
      arr.push_back(pt);
    }
    doc[c.name] = arr;
  }
  os << doc.dump(2) << '\n';
}

void write_region_svg(std::ostream& os, const std::vector<NamedCurve>& curves) {
  double xmax = 0.1, ymax = 0.1;
  for (const auto& c : curves)
    for (const auto& p : c.points) {
      xmax = std::max(xmax, to_double(p.sf));
      ymax = std::max(ymax, to_double(p.ss));
    }
  const double w = 480, h = 360, pad = 50;
  auto X = [&](double v) { return pad + v / (xmax * 1.1) * (w - 2 * pad); };
  auto Y = [&](double v) { return h - pad - v / (ymax * 1.1) * (h - 2 * pad); };
  char buf[128];
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  std::snprintf(buf, sizeof buf, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n", X(0),
                Y(0), w - pad / 2, Y(0));
  os << buf;
  std::snprintf(buf, sizeof buf, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n", X(0),
                Y(0), X(0), pad / 2);
  os << buf;
  std::snprintf(buf, sizeof buf, "<text x=\"%.2f\" y=\"%.2f\">S^(F)</text>\n", w - pad, h - pad / 3);
  os << buf;
  std::snprintf(buf, sizeof buf, "<text x=\"%.2f\" y=\"%.2f\">S^(S)</text>\n", pad / 4, pad / 3);
  os << buf;
  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c"};
  std::size_t ci = 0;
  for (const auto& c : curves) {
    os << "<polyline fill=\"none\" stroke=\"" << colors[ci++ % 3] << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", i ? " " : "", X(to_double(c.points[i].sf)),
                    Y(to_double(c.points[i].ss)));
      os << buf;
    }
    os << "\"><title>" << c.name << "</title></polyline>\n";
  }
  os << "</svg>\n";
}

void write_zf_csv(std::ostream& os, const std::vector<ZfTrial>& trials) {
  os << "trial,solvable,max_cross_residual,min_self_rank\n";
  for (const auto& t : trials)
    os << t.trial << ',' << (t.report.solvable ? 1 : 0) << ','
       << (t.rank_deficient ? std::string("nan") : format_sci(t.report.max_cross_residual)) << ','
       << t.report.min_self_rank << '\n';
}

void write_schedule_table(std::ostream& os, const SchedulePlan& plan) {
  os << "step,phase,kind,round,consumes,produces\n";
  auto join = [](const std::set<std::string>& s) {
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : " ") + x;
    return out;
  };
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const Step& s = plan.steps[i];
    os << i << ',' << s.phase << ',' << to_string(s.kind) << ',' << s.round_index << ",\"" << join(s.consumes)
       << "\",\"" << join(s.produces) << "\"\n";
  }
}

}  // namespace hexmg
