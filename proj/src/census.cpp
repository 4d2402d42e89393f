#include "amm/census.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "json.hpp"

#include "amm/amm_exact.hpp"
#include "amm/amm_float.hpp"
#include "amm/charpoly.hpp"
#include "amm/errors.hpp"
#include "amm/tree_chunks.hpp"

namespace amm {

RankMethod parse_method(const std::string& name) {
  if (name == "exact") return RankMethod::Exact;
  if (name == "coeff-fast") return RankMethod::CoeffFast;
  if (name == "float") return RankMethod::Float;
  throw InputError("unknown rank method '" + name + "' (expected exact, coeff-fast or float)");
}

std::string to_string(RankMethod m) {
  switch (m) {
    case RankMethod::Exact: return "exact";
    case RankMethod::CoeffFast: return "coeff-fast";
    case RankMethod::Float: return "float";
  }
  return "?";
}

TreeRank classify_tree(const Tree& t, RankMethod method) {
  const IntPoly phi = matching_char_poly(t);
  TreeRank r;
  r.simple = is_squarefree(phi);
  switch (method) {
    case RankMethod::Exact:
      r.rank = average_mixing_exact(t, phi).rank;
      break;
    case RankMethod::CoeffFast:
      r.rank = r.simple ? rank_via_coefficient(t, phi) : average_mixing_exact(t, phi).rank;
      break;
    case RankMethod::Float:
      r.rank = numeric_rank(average_mixing_float(t), 1e-8);
      break;
  }
  return r;
}

namespace {

constexpr int kCheckpointVersion = 1;
constexpr const char* kCheckpointFormat = "amm-census-checkpoint";

// rank -> (trees, simple trees)
using Tally = std::map<int, std::pair<std::uint64_t, std::uint64_t>>;

struct OrderState {
  std::set<std::size_t> completed;
  Tally tally;
  bool done = false;
};

struct Checkpoint {
  std::string method;
  std::size_t chunk_size = 0;
  std::map<int, OrderState> orders;
};

nlohmann::json to_json(const Checkpoint& c) {
  nlohmann::json orders = nlohmann::json::object();
  for (const auto& [n, st] : c.orders) {
    nlohmann::json tally = nlohmann::json::array();
    for (const auto& [rank, counts] : st.tally) tally.push_back({rank, counts.first, counts.second});
    orders[std::to_string(n)] = {
        {"completed", std::vector<std::size_t>(st.completed.begin(), st.completed.end())},
        {"tally", tally},
        {"done", st.done},
    };
  }
  return {{"format", kCheckpointFormat}, {"version", kCheckpointVersion}, {"method", c.method},
          {"chunk_size", c.chunk_size},  {"orders", orders}};
}

Checkpoint load_checkpoint(const std::string& path, const CensusOptions& opt) {
  Checkpoint c;
  c.method = to_string(opt.method);
  c.chunk_size = opt.chunk_size;
  std::ifstream in(path);
  if (!in) return c;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    if (doc.at("format") != kCheckpointFormat) throw InputError("checkpoint " + path + ": unknown format");
    if (doc.at("version").get<int>() != kCheckpointVersion)
      throw InputError("checkpoint " + path + ": version mismatch");
    if (doc.at("method").get<std::string>() != c.method)
      throw InputError("checkpoint " + path + ": written by method " + doc.at("method").get<std::string>() +
                       ", resuming with " + c.method);
    if (doc.at("chunk_size").get<std::size_t>() != c.chunk_size)
      throw InputError("checkpoint " + path + ": chunk size mismatch");
    for (const auto& [key, val] : doc.at("orders").items()) {
      OrderState st;
      for (auto idx : val.at("completed")) st.completed.insert(idx.get<std::size_t>());
      for (const auto& row : val.at("tally"))
        st.tally[row.at(0).get<int>()] = {row.at(1).get<std::uint64_t>(), row.at(2).get<std::uint64_t>()};
      st.done = val.at("done").get<bool>();
      c.orders[std::stoi(key)] = std::move(st);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError("checkpoint " + path + ": " + e.what());
  }
  return c;
}

void save_checkpoint(const std::string& path, const Checkpoint& c) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw InputError("cannot write checkpoint " + tmp);
    out << to_json(c).dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

CensusOutcome run_census(const CensusOptions& opt) {
  if (opt.n_min < 2 || opt.n_min > opt.n_max) throw InputError("census needs 2 <= n_min <= n_max");
  if (opt.chunk_size == 0) throw InputError("chunk size must be positive");
  const bool persist = !opt.checkpoint_path.empty();
  Checkpoint ckpt;
  if (persist) {
    ckpt = load_checkpoint(opt.checkpoint_path, opt);
  } else {
    ckpt.method = to_string(opt.method);
    ckpt.chunk_size = opt.chunk_size;
  }

  std::mutex mu;
  std::atomic<bool> halt{false};
  std::size_t processed = 0;
  CensusOutcome outcome;
  outcome.complete = true;
  auto cancelled = [&] { return opt.cancel && opt.cancel->load(); };

  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    OrderState& st = ckpt.orders[n];
    if (st.done) continue;
    auto skip = [&](std::size_t idx) {
      if (cancelled()) halt = true;
      std::lock_guard lock(mu);
      return st.completed.count(idx) > 0;
    };
    auto work = [&](const TreeChunk& chunk) {
      Tally local;
      for (const Tree& t : chunk.trees) {
        const TreeRank r = classify_tree(t, opt.method);
        auto& cell = local[r.rank];
        ++cell.first;
        if (r.simple) ++cell.second;
      }
      std::lock_guard lock(mu);
      for (const auto& [rank, counts] : local) {
        auto& cell = st.tally[rank];
        cell.first += counts.first;
        cell.second += counts.second;
      }
      st.completed.insert(chunk.index);
      if (persist) save_checkpoint(opt.checkpoint_path, ckpt);
      ++processed;
      if ((opt.stop_after_chunks && processed >= *opt.stop_after_chunks) || cancelled()) halt = true;
    };
    const DispatchResult res = dispatch_tree_chunks(n, opt.chunk_size, opt.threads, work, skip, &halt);
    if (!res.exhausted || st.completed.size() != res.chunks) {
      outcome.complete = false;
      break;
    }
    st.done = true;
    st.completed.clear();
    if (persist) save_checkpoint(opt.checkpoint_path, ckpt);
  }

  for (const auto& [n, st] : ckpt.orders) {
    if (n < opt.n_min || n > opt.n_max || !st.done) continue;
    for (const auto& [rank, counts] : st.tally) outcome.records.push_back({n, rank, counts.first, counts.second});
  }
  return outcome;
}

std::string census_csv(const std::vector<CensusRecord>& records) {
  std::vector<CensusRecord> sorted = records;
  std::sort(sorted.begin(), sorted.end(),
            [](const CensusRecord& a, const CensusRecord& b) { return std::tie(a.n, a.rank) < std::tie(b.n, b.rank); });
  std::ostringstream out;
  out << "n,rank,trees,simple_trees\n";
  for (const auto& r : sorted) out << r.n << ',' << r.rank << ',' << r.trees << ',' << r.simple_trees << '\n';
  return out.str();
}

std::vector<CensusRecord> parse_census_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InputError("census CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "n,rank,trees,simple_trees") throw InputError("census CSV: unexpected header '" + line + "'");
  std::vector<CensusRecord> out;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    CensusRecord r;
    unsigned long long trees = 0, simple = 0;
    if (std::sscanf(line.c_str(), "%d,%d,%llu,%llu", &r.n, &r.rank, &trees, &simple) != 4)
      throw InputError("census CSV: malformed line " + std::to_string(lineno));
    r.trees = trees;
    r.simple_trees = simple;
    out.push_back(r);
  }
  return out;
}

}  // namespace amm
