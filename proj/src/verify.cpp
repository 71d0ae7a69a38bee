#include "fmzv/verify.hpp"

#include "fmzv/errors.hpp"
#include "fmzv/harmonic.hpp"
#include "fmzv/parallel.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <stdexcept>
#include <tuple>

namespace fmzv {

Residue PrimeWorkspace::z(unsigned k) const {
  std::call_once(once_, [this] {
    table_ = std::make_unique<BernoulliTable>(ctx_, ctx_.prime() - 3);
  });
  return z_residue(k, *table_);
}

namespace {

void require_family(unsigned k, unsigned s) {
  if (k < 2 || s < 1 || k < 2 * s)
    throw InfeasibleFamily(fmt::format("I_0({}, {}) is empty", k, s));
}

bool too_small(unsigned k, u64 p) { return p <= static_cast<u64>(k) + 1; }

VerificationRecord skip_small(std::string_view check, unsigned k, std::optional<unsigned> s, u64 p) {
  return VerificationRecord::skip(std::string(check), p, fmt::format("p <= {} + 1", k)).with_ks(k, s);
}

} // namespace

Residue family_rhs(unsigned k, unsigned s, const PrimeWorkspace& ws) {
  const PrimeCtx& ctx = ws.ctx();
  const Residue two(2, ctx);
  const Residue euler = Residue(1, ctx) - mod_inv(two).pow(k - 1);
  return two * binom_mod(k - 1, 2 * static_cast<std::int64_t>(s) - 1, ctx) * euler * ws.z(k);
}

VerificationRecord verify_ao(unsigned k, unsigned s, const PrimeWorkspace& ws) {
  require_family(k, s);
  const PrimeCtx& ctx = ws.ctx();
  if (too_small(k, ctx.prime()))
    return skip_small("ao", k, s, ctx.prime());
  return VerificationRecord::compare("ao", family_sum_star(k, s, ctx), family_rhs(k, s, ws))
      .with_ks(k, s);
}

VerificationRecord verify_lm(unsigned k, unsigned s, const PrimeWorkspace& ws) {
  require_family(k, s);
  const PrimeCtx& ctx = ws.ctx();
  if (too_small(k, ctx.prime()))
    return skip_small("lm", k, s, ctx.prime());
  return VerificationRecord::compare("lm", family_sum_alt_strict(k, s, ctx), family_rhs(k, s, ws))
      .with_ks(k, s);
}

VerificationRecord verify_lemma(unsigned k, unsigned s, const PrimeWorkspace& ws) {
  require_family(k, s);
  const PrimeCtx& ctx = ws.ctx();
  if (too_small(k, ctx.prime()))
    return skip_small("lemma", k, s, ctx.prime());
  const Residue strict = family_sum_alt_strict(k, s, ctx);
  const Residue rhs = k % 2 == 1 ? strict : -strict; // (-1)^{k-1}
  return VerificationRecord::compare("lemma", family_sum_star(k, s, ctx), rhs).with_ks(k, s);
}

VerificationRecord verify_ao(unsigned k, unsigned s, const PrimeCtx& ctx) {
  return verify_ao(k, s, PrimeWorkspace(ctx));
}
VerificationRecord verify_lm(unsigned k, unsigned s, const PrimeCtx& ctx) {
  return verify_lm(k, s, PrimeWorkspace(ctx));
}
VerificationRecord verify_lemma(unsigned k, unsigned s, const PrimeCtx& ctx) {
  return verify_lemma(k, s, PrimeWorkspace(ctx));
}

VerificationRecord verify_antipode(const Index& ix, const PrimeCtx& ctx) {
  if (ix.empty())
    throw std::invalid_argument("antipode identity needs depth >= 1");
  const unsigned w = ix.weight();
  const u64 p = ctx.prime();
  if (too_small(w, p))
    return skip_small("antipode", w, ix.height(), p).with_index(ix.to_string());
  const auto parts = ix.parts();
  const InversePowerTable table(ctx, *std::max_element(parts.begin(), parts.end()));
  const std::size_t r = ix.depth();
  Residue acc(0, ctx);
  for (std::size_t i = 0; i <= r; ++i) {
    const Index head = ix.slice(0, i).reversed();
    const Index tail = ix.slice(i, r);
    const Residue term = mhs_strict(head, ctx, table) * mhs_star(tail, ctx, table);
    acc += i % 2 == 0 ? term : -term;
  }
  return VerificationRecord::compare("antipode", acc, Residue(0, ctx))
      .with_ks(w, ix.height())
      .with_index(ix.to_string());
}

VerificationRecord verify_reversal(const Index& ix, const PrimeCtx& ctx) {
  const unsigned w = ix.weight();
  const u64 p = ctx.prime();
  if (too_small(w, p))
    return skip_small("reversal", w, ix.height(), p).with_index(ix.to_string());
  const Residue forward = mhs_strict(ix, ctx);
  const Residue rhs = w % 2 == 0 ? forward : -forward;
  return VerificationRecord::compare("reversal", mhs_strict(ix.reversed(), ctx), rhs)
      .with_ks(w, ix.height())
      .with_index(ix.to_string());
}

VerificationRecord verify_height_sum(unsigned k, unsigned s, const PrimeCtx& ctx) {
  if (k == 0 && s == 0)
    throw std::invalid_argument("height sum at (0, 0) is the empty index, value 1");
  if (2 * s > k)
    throw InfeasibleFamily(fmt::format("I({}, {}) is empty", k, s));
  if (too_small(k, ctx.prime()))
    return skip_small("height", k, s, ctx.prime());
  return VerificationRecord::compare("height", family_sum_star_all(k, s, ctx), Residue(0, ctx))
      .with_ks(k, s);
}

namespace {

constexpr std::array<std::pair<CheckKind, std::string_view>, 7> kCheckNames{{
    {CheckKind::ao, "ao"},
    {CheckKind::lm, "lm"},
    {CheckKind::lemma, "lemma"},
    {CheckKind::antipode, "antipode"},
    {CheckKind::reversal, "reversal"},
    {CheckKind::height, "height"},
    {CheckKind::euler, "euler"},
}};

} // namespace

std::string_view check_name(CheckKind kind) noexcept {
  for (const auto& [k, name] : kCheckNames)
    if (k == kind)
      return name;
  return "?";
}

std::optional<CheckKind> parse_check(std::string_view name) noexcept {
  for (const auto& [k, n] : kCheckNames)
    if (n == name)
      return k;
  return std::nullopt;
}

std::vector<SweepTask> plan_tasks(const SweepPlan& plan) {
  std::vector<CheckKind> checks = plan.checks;
  std::sort(checks.begin(), checks.end(),
            [](CheckKind a, CheckKind b) { return check_name(a) < check_name(b); });
  checks.erase(std::unique(checks.begin(), checks.end()), checks.end());

  std::vector<SweepTask> tasks;
  auto for_primes = [&](SweepTask t) {
    for (u64 p : plan.primes) {
      t.p = p;
      tasks.push_back(t);
    }
  };
  for (CheckKind c : checks) {
    switch (c) {
    case CheckKind::ao:
    case CheckKind::lm:
    case CheckKind::lemma:
      for (unsigned k = 2; k <= plan.k_max; ++k)
        for (unsigned s = std::max(plan.s_min, 1u); s <= std::min(k / 2, plan.s_max); ++s)
          for_primes(SweepTask{c, k, s, std::nullopt, 0});
      break;
    case CheckKind::height:
      for (unsigned k = 1; k <= plan.k_max; ++k)
        for (unsigned s = plan.s_min; s <= std::min(k / 2, plan.s_max); ++s)
          for_primes(SweepTask{c, k, s, std::nullopt, 0});
      break;
    case CheckKind::euler:
      for (unsigned k = 2; k <= plan.k_max; ++k)
        for_primes(SweepTask{c, k, std::nullopt, std::nullopt, 0});
      break;
    case CheckKind::antipode:
    case CheckKind::reversal: {
      std::vector<Index> all;
      for (unsigned w = 1; w <= plan.w_max; ++w)
        for (Index& ix : enumerate_compositions(w))
          all.push_back(std::move(ix));
      std::sort(all.begin(), all.end(), [](const Index& a, const Index& b) {
        return std::tuple(a.weight(), a.height(), a) < std::tuple(b.weight(), b.height(), b);
      });
      for (const Index& ix : all)
        for_primes(SweepTask{c, ix.weight(), ix.height(), ix, 0});
      break;
    }
    }
  }
  // Already in (check, k, s, index, p) order by construction.
  return tasks;
}

std::shared_ptr<const PrimeWorkspace> WorkspaceCache::get(u64 p) {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(p);
  if (it == entries_.end())
    it = entries_.emplace(p, std::make_shared<const PrimeWorkspace>(PrimeCtx(p))).first;
  return it->second;
}

VerificationRecord run_task(const SweepTask& task, WorkspaceCache& cache) {
  const std::string_view name = check_name(task.check);
  try {
    const auto ws = cache.get(task.p);
    const PrimeCtx& ctx = ws->ctx();
    switch (task.check) {
    case CheckKind::ao:
      return verify_ao(task.k, *task.s, *ws);
    case CheckKind::lm:
      return verify_lm(task.k, *task.s, *ws);
    case CheckKind::lemma:
      return verify_lemma(task.k, *task.s, *ws);
    case CheckKind::height:
      return verify_height_sum(task.k, *task.s, ctx);
    case CheckKind::antipode:
      return verify_antipode(*task.index, ctx);
    case CheckKind::reversal:
      return verify_reversal(*task.index, ctx);
    case CheckKind::euler:
      if (static_cast<u64>(task.k) + 3 > task.p)
        return VerificationRecord::skip("euler", task.p, fmt::format("p < {} + 3", task.k))
            .with_ks(task.k, std::nullopt);
      return check_euler_congruence(task.k, ctx);
    }
  } catch (const std::exception& e) {
    VerificationRecord r;
    r.check = std::string(name);
    r.k = task.k;
    r.s = task.s;
    if (task.index)
      r.index = task.index->to_string();
    r.p = task.p;
    r.detail = fmt::format("error: {}", e.what());
    return r;
  }
  throw std::logic_error("unhandled check kind");
}

std::vector<VerificationRecord> run_tasks(std::span<const SweepTask> tasks, WorkspaceCache& cache,
                                          unsigned jobs) {
  std::vector<VerificationRecord> out(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) { out[i] = run_task(tasks[i], cache); });
  return out;
}

std::vector<VerificationRecord> verify_range(const SweepPlan& plan, unsigned jobs) {
  const auto tasks = plan_tasks(plan);
  WorkspaceCache cache;
  return run_tasks(tasks, cache, jobs);
}

} // namespace fmzv
