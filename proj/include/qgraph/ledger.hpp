#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qgraph/types.hpp"

namespace qgraph {

// Cost of one logical query against a (possibly compound) oracle.
// Primitive oracles cost one query and one time step; an oracle that is
// itself implemented by a subroutine costs that subroutine's totals.
struct QueryCost {
  double queries = 1.0;
  double time = 1.0;
};

struct SubroutineCharge {
  double queries = 0.0;
  double time = 0.0;
};

// Central account of everything the simulation spends.
//   oracle_queries  actual adjacency/weight lookups performed by the code
//   charged_queries what the algorithms bill under the cost model
//   charged_time    billed time steps (queries plus bookkeeping factors)
class QueryLedger {
 public:
  void count_oracle() { ++oracle_queries_; }

  void charge(const std::string& label, double queries, double time) {
    if (queries < 0.0 || time < 0.0) {
      throw InvalidParam("negative charge");
    }
    charged_queries_ += queries;
    charged_time_ += time;
    auto& row = per_subroutine_[label];
    row.queries += queries;
    row.time += time;
  }

  std::uint64_t oracle_queries() const { return oracle_queries_; }
  double charged_queries() const { return charged_queries_; }
  double charged_time() const { return charged_time_; }
  const std::map<std::string, SubroutineCharge>& per_subroutine() const {
    return per_subroutine_;
  }

  void reset() {
    oracle_queries_ = 0;
    charged_queries_ = 0.0;
    charged_time_ = 0.0;
    per_subroutine_.clear();
  }

 private:
  std::uint64_t oracle_queries_ = 0;
  double charged_queries_ = 0.0;
  double charged_time_ = 0.0;
  std::map<std::string, SubroutineCharge> per_subroutine_;
};

}  // namespace qgraph
