#include <alc/engine.hpp>

#include <alc/squarebit.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstring>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace alc {

namespace {

RMatrix identity_matrix(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e9b5ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Keeps the cap smallest distinct (rank, payload) pairs seen. Merging two of
// these yields the same result regardless of how offers were split between
// them, which is what makes audit sampling independent of the thread
// partition; duplicate offers of the same pair collapse.
struct CappedMinSet {
  std::size_t cap = 0;
  std::set<std::pair<std::uint64_t, std::uint64_t>> entries;

  void offer(std::uint64_t rank, std::uint64_t payload) {
    if (cap == 0) return;
    const auto item = std::make_pair(rank, payload);
    if (entries.size() < cap) {
      entries.insert(item);
      return;
    }
    if (*entries.rbegin() > item) {
      entries.insert(item);
      if (entries.size() > cap) entries.erase(std::prev(entries.end()));
    }
  }
  void fold(const CappedMinSet& other) {
    for (const auto& [rank, payload] : other.entries) offer(rank, payload);
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted_entries() const {
    return {entries.begin(), entries.end()};
  }
};

// eq and neq multiplicity vectors over model states, zero-padded; the sole
// input of the best-value LP, hence the memoization key for it.
struct ValueKey {
  std::array<std::uint8_t, 48> bytes{};
  friend bool operator==(const ValueKey&, const ValueKey&) = default;
  friend bool operator<(const ValueKey& a, const ValueKey& b) { return a.bytes < b.bytes; }
};

struct ValueKeyHash {
  std::size_t operator()(const ValueKey& k) const {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (int i = 0; i < 48; i += 8) {
      std::uint64_t w = 0;
      std::memcpy(&w, k.bytes.data() + i, 8);
      h = splitmix64(h ^ w);
    }
    return static_cast<std::size_t>(h);
  }
};

using Probs = std::vector<std::vector<Rational>>;  // [effect][state]

Probs probability_table(const GptModel& model) {
  Probs t(model.effects.size(), std::vector<Rational>(model.states.size()));
  for (std::size_t i = 0; i < model.effects.size(); ++i)
    for (std::size_t s = 0; s < model.states.size(); ++s)
      t[i][s] = probability(model.effects[i], model.states[s]);
  return t;
}

// Completeness block shared by every decoder LP: one row per matrix cell of
// sum_i (p_i + q_i) E_i = unit over the 2·nE variables (p block then q block).
struct LpBase {
  std::size_t n_effects = 0;
  RMatrix completeness;
  RVector unit_rhs;
};

LpBase make_lp_base(const GptModel& model, const RMatrix& unit) {
  LpBase base;
  base.n_effects = model.effects.size();
  const std::size_t cells = unit.rows() * unit.cols();
  base.completeness = RMatrix(cells, 2 * base.n_effects);
  base.unit_rhs = RVector(cells);
  for (std::size_t i = 0; i < base.n_effects; ++i) {
    const RMatrix& e = std::get<RMatrix>(model.effects[i].value);
    const RVector v = e.vectorize();
    for (std::size_t r = 0; r < cells; ++r) {
      base.completeness.at(r, i) = v[r];
      base.completeness.at(r, base.n_effects + i) = v[r];
    }
  }
  const RVector u = unit.vectorize();
  for (std::size_t r = 0; r < u.size(); ++r) base.unit_rhs[r] = u[r];
  return base;
}

LpProblem perfect_problem(const LpBase& base, const Probs& probs, const std::vector<int>& eq,
                          const std::vector<int>& neq) {
  const std::size_t cells = base.unit_rhs.size();
  const std::size_t n2 = 2 * base.n_effects;
  LpProblem lp;
  lp.constraint_matrix = RMatrix(cells + eq.size() + neq.size(), n2);
  lp.rhs = RVector(cells + eq.size() + neq.size());
  for (std::size_t r = 0; r < cells; ++r) {
    for (std::size_t c = 0; c < n2; ++c) lp.constraint_matrix.at(r, c) = base.completeness.at(r, c);
    lp.rhs[r] = base.unit_rhs[r];
  }
  std::size_t r = cells;
  for (int s : eq) {
    for (std::size_t i = 0; i < base.n_effects; ++i) lp.constraint_matrix.at(r, i) = probs[i][s];
    lp.rhs[r] = 1;
    ++r;
  }
  for (int s : neq) {
    for (std::size_t i = 0; i < base.n_effects; ++i) lp.constraint_matrix.at(r, i) = probs[i][s];
    lp.rhs[r] = 0;
    ++r;
  }
  return lp;
}

LpProblem value_problem(const LpBase& base, const Probs& probs, const std::uint8_t* eq_counts,
                        const std::uint8_t* neq_counts, std::size_t n_states, int n_strings) {
  LpProblem lp;
  lp.constraint_matrix = base.completeness;
  lp.rhs = base.unit_rhs;
  RVector c(2 * base.n_effects);
  const Rational scale = rat(1, n_strings * n_strings);
  for (std::size_t i = 0; i < base.n_effects; ++i) {
    Rational ce(0), cn(0);
    for (std::size_t s = 0; s < n_states; ++s) {
      if (eq_counts[s]) ce += Rational(eq_counts[s]) * probs[i][s];
      if (neq_counts[s]) cn += Rational(neq_counts[s]) * probs[i][s];
    }
    c[i] = ce * scale;
    c[base.n_effects + i] = cn * scale;
  }
  lp.objective = std::move(c);
  return lp;
}

// ---- strategy code packing -------------------------------------------------

std::uint64_t pack_code(FamilyKind kind, std::optional<int> shared,
                        const std::array<std::uint8_t, 4>& a, const std::array<std::uint8_t, 4>& b) {
  std::uint64_t code = kind == FamilyKind::correlated ? (1ULL << 40) : 0;
  if (shared) code |= static_cast<std::uint64_t>(*shared) << 32;
  for (int i = 0; i < 4; ++i) {
    code |= static_cast<std::uint64_t>(a[i]) << (28 - 4 * i);
    code |= static_cast<std::uint64_t>(b[i]) << (12 - 4 * i);
  }
  return code;
}

EncodingStrategy unpack_code(std::uint64_t code, int n_strings) {
  EncodingStrategy st;
  st.n_strings = n_strings;
  st.kind = (code >> 40) & 1 ? FamilyKind::correlated : FamilyKind::product;
  if (st.kind == FamilyKind::correlated) st.shared_state = static_cast<int>((code >> 32) & 0xff);
  for (int i = 0; i < 4; ++i) {
    st.alice_assign[i] = static_cast<std::uint8_t>((code >> (28 - 4 * i)) & 0xf);
    st.bob_assign[i] = static_cast<std::uint8_t>((code >> (12 - 4 * i)) & 0xf);
  }
  return st;
}

// ---- enumeration layout ----------------------------------------------------

// Mixed-radix odometer over the free strategy digits, most significant first.
// The leading digits whose radix product first reaches kUnitTarget form the
// work-unit prefix; the decomposition depends only on the search space, never
// on the job count, so parallel runs visit identical units.
constexpr std::uint64_t kUnitTarget = 128;

struct DigitPlan {
  FamilyKind kind = FamilyKind::product;
  int n = 4;
  std::vector<int> base;   // smallest value per digit
  std::vector<int> count;  // radix per digit
  std::size_t unit_digits = 0;
  std::uint64_t units = 1;

  // digit order: [shared] a_0..a_{n-1} b_0..b_{n-1} (shared only if correlated)
  int shared_digit() const { return kind == FamilyKind::correlated ? 0 : -1; }
  int alice_digit(int x) const { return (kind == FamilyKind::correlated ? 1 : 0) + x; }
  int bob_digit(int y) const { return (kind == FamilyKind::correlated ? 1 : 0) + n + y; }
};

DigitPlan make_plan(FamilyKind kind, int n, const SearchSpace& space, bool gauge_fixed) {
  DigitPlan plan;
  plan.kind = kind;
  plan.n = n;
  auto push = [&](int base, int count) {
    plan.base.push_back(base);
    plan.count.push_back(count);
  };
  if (kind == FamilyKind::correlated) {
    push(0, static_cast<int>(space.shared_states.size()));
    for (int x = 0; x < n; ++x) {
      if (x == 0 && gauge_fixed)
        push(space.identity_op, 1);
      else
        push(0, static_cast<int>(space.alice_ops.size()));
    }
    for (int y = 0; y < n; ++y) push(0, static_cast<int>(space.bob_ops.size()));
  } else {
    for (int x = 0; x < n; ++x) push(0, static_cast<int>(space.alice_preps.size()));
    for (int y = 0; y < n; ++y) push(0, static_cast<int>(space.bob_preps.size()));
  }
  plan.unit_digits = 0;
  plan.units = 1;
  while (plan.unit_digits < plan.base.size() && plan.units < kUnitTarget) {
    plan.units *= static_cast<std::uint64_t>(plan.count[plan.unit_digits]);
    ++plan.unit_digits;
  }
  return plan;
}

std::uint64_t code_from_digits(const DigitPlan& plan, const std::vector<int>& val) {
  std::array<std::uint8_t, 4> a{}, b{};
  std::optional<int> shared;
  if (plan.kind == FamilyKind::correlated) shared = val[0];
  for (int x = 0; x < plan.n; ++x) a[x] = static_cast<std::uint8_t>(val[plan.alice_digit(x)]);
  for (int y = 0; y < plan.n; ++y) b[y] = static_cast<std::uint8_t>(val[plan.bob_digit(y)]);
  return pack_code(plan.kind, shared, a, b);
}

// ---- shared scan state -----------------------------------------------------

struct MemoEntry {
  bool feasible = false;
  RVector p, q;  // present when feasible
};

struct FeasibilityMemo {
  static constexpr std::size_t kShards = 16;
  std::array<std::mutex, kShards> locks;
  std::array<std::unordered_map<std::uint64_t, MemoEntry>, kShards> maps;

  std::size_t total_keys() {
    std::size_t n = 0;
    for (auto& m : maps) n += m.size();
    return n;
  }
};

struct ScanAccumulator {
  std::mutex lock;
  std::uint64_t examined = 0, collisions = 0;
  std::uint64_t perfect_code = UINT64_MAX;
  std::optional<PerfectRecord> perfect;
  std::uint64_t first_code = UINT64_MAX;
  CappedMinSet collision_samples;
  CappedMinSet infeasible_keys;
  std::unordered_map<ValueKey, std::uint64_t, ValueKeyHash> value_first;
};

struct ScanConfig {
  const GptModel* model = nullptr;
  const SearchSpace* space = nullptr;
  const Probs* probs = nullptr;
  const LpBase* lp_base = nullptr;
  int n = 4;
  std::uint64_t seed = 1;
  std::size_t audit_cap = 0;
  bool run_feasibility = true;  // phase A: perfect hunt; otherwise value collection
  // correlated image LUT: [(a * n_bob + b) * n_states + shared] -> state pos
  std::vector<std::uint8_t> corr_img;
  // product LUT: [a * n_bob_preps + b] -> state pos
  std::vector<std::uint8_t> prod_img;
};

void build_luts(ScanConfig& cfg) {
  const GptModel& model = *cfg.model;
  const SearchSpace& sp = *cfg.space;
  const std::size_t S = model.states.size();
  if (S > 24) throw std::logic_error("engine supports at most 24 model states");
  const std::size_t A = sp.alice_ops.size(), B = sp.bob_ops.size();
  cfg.corr_img.assign(A * B * S, 0);
  for (std::size_t a = 0; a < A; ++a)
    for (std::size_t b = 0; b < B; ++b) {
      const Transformation t{sp.alice_ops[a], sp.bob_ops[b], false};
      for (std::size_t s = 0; s < S; ++s) {
        const GptState img = apply(t, model.states[s]);
        const auto pos = find_state_index(model.states, std::get<RMatrix>(img.value));
        if (!pos) throw std::logic_error("correlated image leaves the model");
        cfg.corr_img[(a * B + b) * S + s] = static_cast<std::uint8_t>(*pos);
      }
    }
  const std::size_t PA = sp.alice_preps.size(), PB = sp.bob_preps.size();
  cfg.prod_img.assign(PA * PB, 0);
  for (std::size_t a = 0; a < PA; ++a)
    for (std::size_t b = 0; b < PB; ++b)
      cfg.prod_img[a * PB + b] = static_cast<std::uint8_t>(sp.product_pair_pos[a][b]);
}

// Runs the units of one digit plan, folding unit-local results into the
// accumulator. Folds are commutative (sums, min-code, capped min-sets, min
// per value key), so the outcome is independent of scheduling.
void run_scan(const ScanConfig& cfg, const DigitPlan& plan, FeasibilityMemo& memo,
              ScanAccumulator& acc, int jobs) {
  const std::size_t S = cfg.model->states.size();
  const std::size_t D = plan.base.size();
  const int n = plan.n;

  auto run_unit = [&](std::uint64_t unit) {
    ScanAccumulator local;
    local.collision_samples.cap = cfg.audit_cap;
    local.infeasible_keys.cap = cfg.audit_cap;
    std::unordered_map<std::uint64_t, bool> seen;  // unit-local memo mirror

    std::vector<int> val(D);
    std::uint64_t rest = unit;
    for (std::size_t d = plan.unit_digits; d-- > 0;) {
      val[d] = plan.base[d] + static_cast<int>(rest % plan.count[d]);
      rest /= plan.count[d];
    }
    for (std::size_t d = plan.unit_digits; d < D; ++d) val[d] = plan.base[d];

    const std::size_t B = cfg.space->bob_ops.size();
    const std::size_t PB = cfg.space->bob_preps.size();
    std::array<std::uint8_t, 16> pos{};
    std::array<std::uint8_t, 48> counts{};

    for (;;) {
      std::uint32_t eq_mask = 0, neq_mask = 0;
      if (plan.kind == FamilyKind::correlated) {
        const int shared = val[0];
        for (int x = 0; x < n; ++x) {
          const std::uint8_t* row = cfg.corr_img.data() + (val[plan.alice_digit(x)] * B) * S;
          for (int y = 0; y < n; ++y) {
            const std::uint8_t p = row[val[plan.bob_digit(y)] * S + shared];
            pos[x * n + y] = p;
            (x == y ? eq_mask : neq_mask) |= 1u << p;
          }
        }
      } else {
        for (int x = 0; x < n; ++x) {
          const std::uint8_t* row = cfg.prod_img.data() + val[plan.alice_digit(x)] * PB;
          for (int y = 0; y < n; ++y) {
            const std::uint8_t p = row[val[plan.bob_digit(y)]];
            pos[x * n + y] = p;
            (x == y ? eq_mask : neq_mask) |= 1u << p;
          }
        }
      }

      ++local.examined;
      const std::uint64_t code = code_from_digits(plan, val);
      if (local.first_code == UINT64_MAX) local.first_code = code;

      const std::uint32_t overlap = eq_mask & neq_mask;
      if (cfg.run_feasibility) {
        if (overlap) {
          ++local.collisions;
          local.collision_samples.offer(splitmix64(code ^ cfg.seed), code);
        } else {
          const std::uint64_t key = (static_cast<std::uint64_t>(eq_mask) << 32) | neq_mask;
          auto it = seen.find(key);
          bool feasible;
          if (it != seen.end()) {
            feasible = it->second;
          } else {
            const std::size_t shard = splitmix64(key) % FeasibilityMemo::kShards;
            std::scoped_lock shard_lock(memo.locks[shard]);
            auto& entry_map = memo.maps[shard];
            auto mit = entry_map.find(key);
            if (mit == entry_map.end()) {
              std::vector<int> eq_list, neq_list;
              for (std::size_t s = 0; s < S; ++s) {
                if (eq_mask & (1u << s)) eq_list.push_back(static_cast<int>(s));
                if (neq_mask & (1u << s)) neq_list.push_back(static_cast<int>(s));
              }
              const LpOutcome out =
                  solve_feasibility(perfect_problem(*cfg.lp_base, *cfg.probs, eq_list, neq_list));
              MemoEntry entry;
              entry.feasible = out.status == LpStatus::feasible;
              if (entry.feasible) {
                const std::size_t nE = cfg.lp_base->n_effects;
                entry.p = RVector(nE);
                entry.q = RVector(nE);
                for (std::size_t i = 0; i < nE; ++i) {
                  entry.p[i] = (*out.witness)[i];
                  entry.q[i] = (*out.witness)[nE + i];
                }
              }
              mit = entry_map.emplace(key, std::move(entry)).first;
            }
            feasible = mit->second.feasible;
            if (feasible && code < local.perfect_code) {
              local.perfect_code = code;
              local.perfect = PerfectRecord{unpack_code(code, n), {mit->second.p, mit->second.q}};
            }
            seen.emplace(key, feasible);
            if (!feasible) local.infeasible_keys.offer(splitmix64(key ^ cfg.seed), key);
          }
        }
      } else if (static_cast<int>(std::popcount(overlap)) < n) {
        counts.fill(0);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) counts[(x == y ? 0 : S) + pos[x * n + y]]++;
        int overlap_cost = 0;
        for (std::size_t s = 0; s < S; ++s) overlap_cost += std::min(counts[s], counts[S + s]);
        if (overlap_cost < n) {
          ValueKey key;
          std::copy(counts.begin(), counts.begin() + S, key.bytes.begin());
          std::copy(counts.begin() + S, counts.begin() + 2 * S, key.bytes.begin() + S);
          auto [it2, inserted] = local.value_first.emplace(key, code);
          if (!inserted && code < it2->second) it2->second = code;
        }
      }

      std::size_t d = D;
      while (d-- > plan.unit_digits) {
        if (++val[d] < plan.base[d] + plan.count[d]) break;
        val[d] = plan.base[d];
      }
      if (d == static_cast<std::size_t>(-1) || d < plan.unit_digits) break;
    }

    std::scoped_lock fold(acc.lock);
    acc.examined += local.examined;
    acc.collisions += local.collisions;
    if (local.first_code < acc.first_code) acc.first_code = local.first_code;
    if (local.perfect_code < acc.perfect_code) {
      acc.perfect_code = local.perfect_code;
      acc.perfect = std::move(local.perfect);
    }
    acc.collision_samples.fold(local.collision_samples);
    acc.infeasible_keys.fold(local.infeasible_keys);
    for (auto& [key, code] : local.value_first) {
      auto [it, inserted] = acc.value_first.emplace(key, code);
      if (!inserted && code < it->second) it->second = code;
    }
  };

  if (jobs <= 1) {
    for (std::uint64_t u = 0; u < plan.units; ++u) run_unit(u);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  const int workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), plan.units));
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::uint64_t u = next.fetch_add(1);
        if (u >= plan.units) return;
        run_unit(u);
      }
    });
  for (auto& t : pool) t.join();
}

bool ops_form_group(const std::vector<RMatrix>& ops, const RMatrix& id) {
  for (const auto& a : ops) {
    bool has_inverse = false;
    for (const auto& b : ops) {
      if (a * b == id) has_inverse = true;
      if (std::find(ops.begin(), ops.end(), a * b) == ops.end()) return false;
    }
    if (!has_inverse) return false;
  }
  return true;
}

void require_unit_effect(const GptModel& model, const RMatrix& unit) {
  for (std::size_t s = 0; s < model.states.size(); ++s)
    if (probability(GptEffect{unit, std::nullopt}, model.states[s]) != 1)
      throw std::logic_error("unit effect does not normalize every model state");
}

}  // namespace

std::string to_string(FamilyKind k) {
  return k == FamilyKind::product ? "product" : "correlated";
}

std::string to_string(FamilySelection s) {
  switch (s) {
    case FamilySelection::product: return "product";
    case FamilySelection::correlated: return "correlated";
    default: return "both";
  }
}

std::uint64_t EncodingStrategy::code() const {
  return pack_code(kind, shared_state, alice_assign, bob_assign);
}

SearchSpace derive_search_space(const GptModel& model) {
  if (model.states.empty() || model.effects.empty())
    throw std::invalid_argument("model has no states or effects");
  const RMatrix* first = std::get_if<RMatrix>(&model.states.front().value);
  if (!first) throw std::invalid_argument("search space requires bipartite matrix states");
  const RMatrix id = identity_matrix(first->rows());

  SearchSpace sp;
  auto push_unique = [](std::vector<RMatrix>& v, const RMatrix& m) {
    if (std::find(v.begin(), v.end(), m) == v.end()) v.push_back(m);
  };
  for (const auto& t : model.transformations) {
    if (t.swap) continue;
    if (t.bob_op == id) push_unique(sp.alice_ops, t.alice_op);
    if (t.alice_op == id) push_unique(sp.bob_ops, t.bob_op);
  }
  for (std::size_t i = 0; i < sp.alice_ops.size(); ++i)
    if (sp.alice_ops[i] == id) {
      sp.identity_op = static_cast<int>(i);
      break;
    }
  for (const auto& a : sp.alice_ops)
    for (const auto& b : sp.bob_ops) {
      const bool allowed = std::any_of(
          model.transformations.begin(), model.transformations.end(),
          [&](const Transformation& t) { return !t.swap && t.alice_op == a && t.bob_op == b; });
      if (!allowed) throw std::logic_error("party-local operations are not jointly closed");
    }

  const auto& cat = catalog();
  std::vector<int> keep;
  for (int i = 0; i < 4; ++i)
    if (find_state_index(model.states, outer(cat.omega[i], cat.omega[i]))) keep.push_back(i);
  for (int i : keep) {
    sp.alice_preps.push_back(cat.omega[i]);
    sp.bob_preps.push_back(cat.omega[i]);
  }
  sp.product_pair_pos.assign(keep.size(), std::vector<int>(keep.size(), -1));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) {
      const auto idx = find_state_index(model.states, outer(sp.alice_preps[a], sp.bob_preps[b]));
      if (!idx) throw std::logic_error("product preparations are not closed");
      sp.product_pair_pos[a][b] = *idx;
    }

  sp.shared_states.resize(model.states.size());
  std::iota(sp.shared_states.begin(), sp.shared_states.end(), 0);
  return sp;
}

EncodedFamily encode(const GptModel& model, const EncodingStrategy& st) {
  if (st.n_strings != 2 && st.n_strings != 4)
    throw std::invalid_argument("n_strings must be 2 or 4");
  for (int i = st.n_strings; i < 4; ++i)
    if (st.alice_assign[i] != 0 || st.bob_assign[i] != 0)
      throw std::invalid_argument("assignments beyond n_strings must be zero");

  const SearchSpace sp = derive_search_space(model);
  const int n = st.n_strings;
  EncodedFamily fam;
  fam.n_strings = n;
  fam.pair_state.assign(static_cast<std::size_t>(n) * n, -1);
  fam.eq_counts.assign(model.states.size(), 0);
  fam.neq_counts.assign(model.states.size(), 0);

  auto pair_pos = [&](int x, int y) -> int {
    if (st.kind == FamilyKind::correlated) {
      if (!st.shared_state || *st.shared_state < 0 ||
          *st.shared_state >= static_cast<int>(model.states.size()))
        throw std::invalid_argument("correlated strategy needs a model shared state");
      if (st.alice_assign[x] >= sp.alice_ops.size() || st.bob_assign[y] >= sp.bob_ops.size())
        throw std::invalid_argument("operation assignment out of range");
      const Transformation t{sp.alice_ops[st.alice_assign[x]], sp.bob_ops[st.bob_assign[y]], false};
      const GptState img = apply(t, model.states[*st.shared_state]);
      const auto idx = find_state_index(model.states, std::get<RMatrix>(img.value));
      if (!idx) throw std::logic_error("correlated image leaves the model");
      return *idx;
    }
    if (st.shared_state) throw std::invalid_argument("product strategy cannot carry a shared state");
    if (st.alice_assign[x] >= sp.alice_preps.size() || st.bob_assign[y] >= sp.bob_preps.size())
      throw std::invalid_argument("preparation assignment out of range");
    return sp.product_pair_pos[st.alice_assign[x]][st.bob_assign[y]];
  };

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int pos = pair_pos(x, y);
      fam.pair_state[static_cast<std::size_t>(x) * n + y] = pos;
      if (x == y)
        fam.eq_counts[pos]++;
      else
        fam.neq_counts[pos]++;
    }
  for (std::size_t s = 0; s < model.states.size(); ++s) {
    if (fam.eq_counts[s]) fam.eq_set.push_back(static_cast<int>(s));
    if (fam.neq_counts[s]) fam.neq_set.push_back(static_cast<int>(s));
  }
  return fam;
}

bool has_collision(const EncodedFamily& family) {
  std::size_t i = 0, j = 0;
  while (i < family.eq_set.size() && j < family.neq_set.size()) {
    if (family.eq_set[i] == family.neq_set[j]) return true;
    if (family.eq_set[i] < family.neq_set[j])
      ++i;
    else
      ++j;
  }
  return false;
}

std::optional<DecoderWitness> perfect_decoder_exists(const GptModel& model,
                                                     const EncodedFamily& family) {
  const RMatrix& unit = catalog().unit;
  require_unit_effect(model, unit);
  const Probs probs = probability_table(model);
  const LpBase base = make_lp_base(model, unit);
  const LpOutcome out =
      solve_feasibility(perfect_problem(base, probs, family.eq_set, family.neq_set));
  if (out.status != LpStatus::feasible) return std::nullopt;
  const std::size_t nE = base.n_effects;
  DecoderWitness w{RVector(nE), RVector(nE)};
  for (std::size_t i = 0; i < nE; ++i) {
    w.p_weights[i] = (*out.witness)[i];
    w.q_weights[i] = (*out.witness)[nE + i];
  }
  return w;
}

Rational best_decoder_value(const GptModel& model, const EncodedFamily& family) {
  const RMatrix& unit = catalog().unit;
  require_unit_effect(model, unit);
  const Probs probs = probability_table(model);
  const LpBase base = make_lp_base(model, unit);
  std::array<std::uint8_t, 48> counts{};
  for (std::size_t s = 0; s < model.states.size(); ++s) {
    counts[s] = static_cast<std::uint8_t>(family.eq_counts[s]);
    counts[model.states.size() + s] = static_cast<std::uint8_t>(family.neq_counts[s]);
  }
  const LpOutcome out = solve_lp_max(value_problem(base, probs, counts.data(),
                                                   counts.data() + model.states.size(),
                                                   model.states.size(), family.n_strings));
  if (out.status != LpStatus::feasible)
    throw std::logic_error("decoder polytope unexpectedly empty or unbounded");
  return *out.value;
}

SearchReport search_perfect(const GptModel& model, int n_strings, FamilySelection families,
                            const SearchOptions& options) {
  if (n_strings != 2 && n_strings != 4) throw std::invalid_argument("n_strings must be 2 or 4");
  if (options.jobs < 1) throw std::invalid_argument("jobs must be positive");
  const auto t0 = std::chrono::steady_clock::now();

  const RMatrix& unit = catalog().unit;
  require_unit_effect(model, unit);
  const SearchSpace space = derive_search_space(model);
  const Probs probs = probability_table(model);
  const LpBase lp_base = make_lp_base(model, unit);

  // The fallback decoder (always answer not-equal) needs the unit inside the
  // effect cone; everything downstream assumes that floor value exists.
  {
    LpProblem q_only;
    q_only.constraint_matrix = RMatrix(lp_base.unit_rhs.size(), lp_base.n_effects);
    for (std::size_t r = 0; r < lp_base.unit_rhs.size(); ++r)
      for (std::size_t c = 0; c < lp_base.n_effects; ++c)
        q_only.constraint_matrix.at(r, c) = lp_base.completeness.at(r, c);
    q_only.rhs = lp_base.unit_rhs;
    if (solve_feasibility(q_only).status != LpStatus::feasible)
      throw std::logic_error("unit effect is not a combination of model effects");
  }

  const RMatrix id = identity_matrix(std::get<RMatrix>(model.states.front().value).rows());
  const bool gauge_fixed = space.identity_op >= 0 && ops_form_group(space.alice_ops, id);

  ScanConfig cfg;
  cfg.model = &model;
  cfg.space = &space;
  cfg.probs = &probs;
  cfg.lp_base = &lp_base;
  cfg.n = n_strings;
  cfg.seed = options.seed;
  cfg.audit_cap = static_cast<std::size_t>(std::max(0, options.audit_samples));
  build_luts(cfg);

  std::vector<FamilyKind> kinds;
  if (families != FamilySelection::correlated && !space.alice_preps.empty() &&
      !space.bob_preps.empty())
    kinds.push_back(FamilyKind::product);
  if (families != FamilySelection::product && !space.alice_ops.empty() && !space.bob_ops.empty())
    kinds.push_back(FamilyKind::correlated);

  SearchReport report;
  report.model = model.name;
  report.n_strings = n_strings;
  report.families = to_string(families);

  FeasibilityMemo memo;
  ScanAccumulator scan;
  scan.collision_samples.cap = cfg.audit_cap;
  scan.infeasible_keys.cap = cfg.audit_cap;

  cfg.run_feasibility = true;
  for (FamilyKind kind : kinds)
    run_scan(cfg, make_plan(kind, n_strings, space, gauge_fixed), memo, scan, options.jobs);

  report.strategies_examined = scan.examined;
  report.collisions_pruned = scan.collisions;
  report.lp_feasibility_calls = memo.total_keys();
  if (scan.perfect) report.perfect = std::move(scan.perfect);

  const Rational floor = rat(static_cast<long>(n_strings) * n_strings - n_strings,
                             static_cast<long>(n_strings) * n_strings);
  if (report.perfect) {
    report.best_value = 1;
    report.best_strategy = report.perfect->strategy;
  } else {
    cfg.run_feasibility = false;
    ScanAccumulator values;
    for (FamilyKind kind : kinds)
      run_scan(cfg, make_plan(kind, n_strings, space, gauge_fixed), memo, values, options.jobs);

    // Highest upper bound first, smallest witnessing code first on ties: once
    // the running best reaches a tier's bound, at most one key per tier can
    // still change the witness, so almost everything after it is skipped.
    // Skipping never changes the result — skipped keys provably cannot raise
    // the best value or supply a smaller witnessing code.
    const std::size_t S = model.states.size();
    std::vector<std::tuple<int, std::uint64_t, ValueKey>> keys;
    keys.reserve(values.value_first.size());
    for (const auto& [key, code] : values.value_first) {
      int overlap_cost = 0;
      for (std::size_t s = 0; s < S; ++s)
        overlap_cost += std::min(key.bytes[s], key.bytes[S + s]);
      keys.emplace_back(overlap_cost, code, key);
    }
    std::sort(keys.begin(), keys.end(),
              [](const auto& a, const auto& b) {
                if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
                return std::get<1>(a) < std::get<1>(b);
              });

    Rational best = floor;
    std::uint64_t best_code = UINT64_MAX;  // sentinel: floor attained, first family wins
    for (const auto& [overlap_cost, code, key] : keys) {
      const Rational ub =
          rat(static_cast<long>(n_strings) * n_strings - overlap_cost,
              static_cast<long>(n_strings) * n_strings);
      if (ub < best) continue;
      if (ub == best && best_code <= code) continue;
      const LpOutcome out = solve_lp_max(value_problem(lp_base, probs, key.bytes.data(),
                                                       key.bytes.data() + S, S, n_strings));
      if (out.status != LpStatus::feasible)
        throw std::logic_error("decoder polytope unexpectedly empty or unbounded");
      ++report.lp_value_calls;
      const Rational v = *out.value;
      if (v > best) {
        best = v;
        best_code = code;
      } else if (v == best && best > floor && code < best_code) {
        best_code = code;
      }
    }
    report.best_value = best;
    if (scan.first_code != UINT64_MAX)
      report.best_strategy =
          unpack_code(best_code != UINT64_MAX ? best_code : scan.first_code, n_strings);
  }

  if (cfg.audit_cap > 0) {
    AuditRecord audit;
    for (const auto& [rank, code] : scan.collision_samples.sorted_entries()) {
      (void)rank;
      const EncodedFamily fam = encode(model, unpack_code(code, n_strings));
      ++audit.samples;
      if (has_collision(fam)) ++audit.collisions_confirmed;
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> keys = scan.infeasible_keys.sorted_entries();
    keys.erase(std::unique(keys.begin(), keys.end(),
                           [](const auto& a, const auto& b) { return a.second == b.second; }),
               keys.end());
    for (const auto& [rank, key] : keys) {
      (void)rank;
      std::vector<int> eq_list, neq_list;
      for (std::size_t s = 0; s < model.states.size(); ++s) {
        if (key & (1ULL << (32 + s))) eq_list.push_back(static_cast<int>(s));
        if (key & (1ULL << s)) neq_list.push_back(static_cast<int>(s));
      }
      const LpProblem lp = perfect_problem(lp_base, probs, eq_list, neq_list);
      const LpOutcome out = solve_feasibility(lp);
      ++audit.samples;
      if (out.status == LpStatus::infeasible) {
        ++audit.lp_infeasible_confirmed;
        if (out.certificate && check_farkas(lp, *out.certificate)) ++audit.certificates_valid;
      }
    }
    report.audit = audit;
  }

  if (report.perfect && replay_success(model, *report.perfect) != 1)
    throw std::logic_error("perfect witness failed exact replay");

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

Rational replay_success(const GptModel& model, const PerfectRecord& record) {
  const EncodedFamily fam = encode(model, record.strategy);
  const std::size_t nE = model.effects.size();
  const RVector& p = record.witness.p_weights;
  const RVector& q = record.witness.q_weights;
  if (p.size() != nE || q.size() != nE)
    throw std::invalid_argument("witness size does not match the model");
  for (std::size_t i = 0; i < nE; ++i)
    if (p[i] < 0 || q[i] < 0) throw std::invalid_argument("witness weights must be nonnegative");

  const RMatrix& unit = catalog().unit;
  RMatrix total(unit.rows(), unit.cols());
  for (std::size_t i = 0; i < nE; ++i)
    total = total + std::get<RMatrix>(model.effects[i].value) * (p[i] + q[i]);
  if (!(total == unit)) throw std::invalid_argument("witness outcomes do not sum to the unit");

  const Probs probs = probability_table(model);
  const int n = fam.n_strings;
  Rational success(0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int s = fam.pair_state[static_cast<std::size_t>(x) * n + y];
      const RVector& w = x == y ? p : q;
      for (std::size_t i = 0; i < nE; ++i)
        if (w[i] != 0) success += w[i] * probs[i][s];
    }
  return success / Rational(static_cast<long>(n) * n);
}

}  // namespace alc
