#pragma once

// Weak Fano / Fano verdicts: -K is nef iff its coordinates in the nef
// generators are all >= 0, ample iff all > 0, and a nef divisor is big iff
// its top self-intersection is positive.

#include <wfano/anticanonical.hpp>
#include <wfano/cone.hpp>
#include <wfano/scenario.hpp>

#include <algorithm>
#include <exception>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

namespace wfano {

enum class Status { fano, weak_fano_not_fano, nef_not_big, not_nef };

inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::fano: return "Fano";
    case Status::weak_fano_not_fano: return "WeakFanoNotFano";
    case Status::nef_not_big: return "NefNotBig";
    case Status::not_nef: return "NotNef";
  }
  return "?";
}

inline std::optional<Status> parse_status(std::string_view name) {
  for (auto s : {Status::fano, Status::weak_fano_not_fano, Status::nef_not_big, Status::not_nef})
    if (status_name(s) == name) return s;
  return std::nullopt;
}

inline bool is_weak_fano(Status s) { return s == Status::fano || s == Status::weak_fano_not_fano; }

struct Verdict {
  Status status = Status::not_nef;
  std::vector<Rational> coeffs;  // -K in the nef generators
  Rational selfint;              // (-K)^n

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Which formula supplies (-K)^n: the closed forms where they exist,
// the blow-up pipeline for the P^n examples.
inline Rational selfint_for(const Scenario& s) {
  switch (s.family) {
    case Family::pp_n1: return kx_selfint_closed(s.n, s.a, s.b);
    case Family::pp_n2: return kx_selfint_p2family(s.n, s.d);
    default: return kx_selfint_pipeline(s);
  }
}

inline Verdict classify(const Scenario& s) {
  const auto cp = cone_presentation(s);
  if (!cp.verified) throw std::logic_error("cone presentation failed the Kronecker check for " + describe(s));
  Verdict v;
  v.coeffs = decompose(anticanonical_class(s), cp.div_gens);
  v.selfint = selfint_for(s);
  switch (nef_status(v.coeffs)) {
    case NefStatus::not_nef: v.status = Status::not_nef; break;
    case NefStatus::interior: v.status = Status::fano; break;
    case NefStatus::boundary:
      v.status = v.selfint > 0 ? Status::weak_fano_not_fano : Status::nef_not_big;
      break;
  }
  return v;
}

inline Verdict classify_main(int n, int a, int b) { return classify(Scenario::main(n, a, b)); }
inline Verdict classify_p2family(int n, int d) { return classify(Scenario::p2(n, d)); }

// Inclusive integer range; lo > hi is empty.
struct IntRange {
  int lo = 0;
  int hi = -1;

  bool empty() const noexcept { return lo > hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct SweepRow {
  Scenario scenario;
  Verdict verdict;
};

struct SkippedScenario {
  Scenario scenario;
  std::string reason;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<SkippedScenario> skipped;
};

namespace detail {
inline auto scenario_key(const Scenario& s) {
  return std::tuple(static_cast<int>(s.family), s.n, s.a, s.b, s.d, s.t);
}
}  // namespace detail

// Classifies every scenario, evaluating in parallel; output is sorted by
// (family, n, a, b, d, t) whatever order the input had.
inline SweepResult sweep(const std::vector<Scenario>& scenarios) {
  SweepResult out;
  std::vector<Scenario> valid;
  for (const auto& s : scenarios) {
    if (auto why = domain_violation(s)) out.skipped.push_back({s, *why});
    else valid.push_back(s);
  }
  std::vector<Verdict> verdicts(valid.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(valid.size(), 1));
  std::vector<std::future<void>> pending;
  for (std::size_t w = 0; w < workers; ++w)
    pending.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < valid.size(); i += workers) verdicts[i] = classify(valid[i]);
    }));
  std::exception_ptr failure;
  for (auto& p : pending) {
    try {
      p.get();
    } catch (...) {
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (std::size_t i = 0; i < valid.size(); ++i) out.rows.push_back({valid[i], std::move(verdicts[i])});
  const auto by_key = [](const auto& x, const auto& y) {
    return detail::scenario_key(x.scenario) < detail::scenario_key(y.scenario);
  };
  std::sort(out.rows.begin(), out.rows.end(), by_key);
  std::sort(out.skipped.begin(), out.skipped.end(), by_key);
  return out;
}

inline std::vector<Scenario> main_grid(IntRange n, IntRange a, IntRange b) {
  std::vector<Scenario> out;
  for (int nn = n.lo; nn <= n.hi; ++nn)
    for (int aa = a.lo; aa <= a.hi; ++aa)
      for (int bb = b.lo; bb <= b.hi; ++bb) out.push_back(Scenario::main(nn, aa, bb));
  return out;
}

inline std::vector<Scenario> p2_grid(IntRange n, IntRange d) {
  std::vector<Scenario> out;
  for (int nn = n.lo; nn <= n.hi; ++nn)
    for (int dd = d.lo; dd <= d.hi; ++dd) out.push_back(Scenario::p2(nn, dd));
  return out;
}

inline std::vector<Scenario> pn_grid(Family f, IntRange n, int t = 0) {
  std::vector<Scenario> out;
  for (int nn = n.lo; nn <= n.hi; ++nn) out.push_back(Scenario::pn(f, nn, t));
  return out;
}

inline SweepResult sweep(IntRange n, IntRange a, IntRange b) { return sweep(main_grid(n, a, b)); }

// (a,b) pairs (or (n,d) pairs) whose rows satisfy pred, for summary tables.
template <class Pred>
std::set<std::pair<int, int>> parameter_set(const SweepResult& r, int n, Pred&& pred) {
  std::set<std::pair<int, int>> out;
  for (const auto& row : r.rows) {
    if (row.scenario.n != n || !pred(row.verdict.status)) continue;
    if (row.scenario.family == Family::pp_n1) out.emplace(row.scenario.a, row.scenario.b);
    else if (row.scenario.family == Family::pp_n2) out.emplace(row.scenario.n, row.scenario.d);
  }
  return out;
}

}  // namespace wfano
