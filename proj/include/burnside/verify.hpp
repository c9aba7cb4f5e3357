#ifndef BURNSIDE_VERIFY_HPP
#define BURNSIDE_VERIFY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "burnside/census.hpp"
#include "burnside/closed_forms.hpp"
#include "burnside/rank_two.hpp"
#include "burnside/simples.hpp"
#include "burnside/subspaces.hpp"

namespace burnside {

struct Settings {
  int p = 3;
  int max_weight = 40;    // weights checked on the E side
  int a_max_weight = 20;  // weights checked on the A side
  std::uint64_t seed = 1;
};

// default weight cap: 40 at p=3, 24 at p=5, 16 otherwise
int default_max_weight(int p);

// Every object needed by the checks, built once per prime. The biset-heavy
// parts (simples, census) are created on first use.
class Workbench {
 public:
  explicit Workbench(Settings s);

  const Settings& settings() const { return s_; }
  int p() const { return s_.p; }
  const BisetContext& ctx() const { return *ctx_; }
  const Cohomology& coh() const { return *coh_; }
  const Subspaces& sub() const { return *sub_; }
  const RankTwo& rank_two() const { return *rt_; }
  const Simples& simples();
  const Census& census();

 private:
  Settings s_;
  std::unique_ptr<BisetContext> ctx_;
  std::unique_ptr<Cohomology> coh_;
  std::unique_ptr<Subspaces> sub_;
  std::unique_ptr<RankTwo> rt_;
  std::unique_ptr<Simples> sim_;
  std::unique_ptr<Census> census_;
};

struct CheckRow {
  std::string check;
  std::optional<int> weight;
  std::string computed;
  std::string expected;
  bool match = false;
};

struct CaseResult {
  std::string id;
  std::string statement;
  std::vector<CheckRow> rows;
  std::string error;  // set when the case threw
  double seconds = 0;

  bool passed() const;
  std::size_t failures() const;
};

struct CaseInfo {
  std::string id;
  std::string statement;
};
const std::vector<CaseInfo>& verification_cases();
bool is_case(const std::string& id);

CaseResult run_case(Workbench& wb, const std::string& id);

// dims of H^{2n}(E), n = 0..max_weight, against the generating function
struct DimRow {
  int weight;
  long long computed;
  long long expected;
};
std::vector<DimRow> dimension_table(const Cohomology& coh, int max_weight);

}  // namespace burnside

#endif
