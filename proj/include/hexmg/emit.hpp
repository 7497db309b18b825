#pragma once

#include "hexmg/clustering.hpp"
#include "hexmg/converse.hpp"
#include "hexmg/regions.hpp"
#include "hexmg/zfverify.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace hexmg {

struct NamedCurve {
  std::string name;  // "inner" or "outer"
  std::vector<MGPoint> points;
};

void write_lattice_csv(std::ostream& os, const Network& net);
void write_cluster_csv(std::ostream& os, const ClusterPlan& plan);

void write_region_csv(std::ostream& os, const std::vector<NamedCurve>& curves);
void write_region_json(std::ostream& os, const std::vector<NamedCurve>& curves);
void write_region_svg(std::ostream& os, const std::vector<NamedCurve>& curves);

void write_zf_csv(std::ostream& os, const std::vector<ZfTrial>& trials);
void write_schedule_table(std::ostream& os, const SchedulePlan& plan);

// Scientific notation with a fixed mantissa width, stable across runs.
std::string format_sci(double x, int digits = 3);

}  // namespace hexmg
