#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "actual_cause/random.hpp"

namespace actual_cause {
namespace {

/// Uniform draws by rejection so that sequences do not depend on the
/// standard library's distribution implementations.
class Draw {
public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n).
  std::size_t below(std::size_t n) {
    const std::uint64_t span = n;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % span);
  }

  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

private:
  std::mt19937_64 engine_;
};

std::vector<Value> range_of(std::size_t size) {
  std::vector<Value> out;
  for (std::size_t i = 0; i < size; ++i) out.emplace_back(static_cast<std::int64_t>(i));
  return out;
}

/// Lookup table as nested conditionals over `args`, one leaf per row.
Expr table(Draw& draw, const std::vector<VarRef>& args, const std::vector<const std::vector<Value>*>& ranges,
           std::size_t depth, const std::vector<Value>& out_range) {
  if (depth == args.size()) return ex::lit(out_range[draw.below(out_range.size())]);
  const auto& r = *ranges[depth];
  const VarRef var = args[depth];
  auto var_expr = var.kind == VarKind::Exogenous ? ex::exo(var.index) : ex::endo(var.index);
  Expr tail = table(draw, args, ranges, depth + 1, out_range);
  for (std::size_t i = r.size() - 1; i-- > 0;) {
    Expr branch = table(draw, args, ranges, depth + 1, out_range);
    tail = ex::if_then_else(ex::eq(var_expr, ex::lit(r[i])), branch, tail);
  }
  return tail;
}

CausalModel generate(const RandomModelParams& params, std::uint64_t seed, std::size_t& sink) {
  Draw draw(seed);
  const std::size_t n = params.endogenous;
  const std::size_t max_range = std::max<std::size_t>(params.max_range, 2);

  std::vector<VariableDecl> exo, endo;
  std::vector<Value> context;
  for (std::size_t i = 0; i < params.exogenous; ++i) {
    exo.push_back({"U" + std::to_string(i + 1), range_of(draw.between(2, max_range))});
    context.push_back(exo.back().range[draw.below(exo.back().range.size())]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    endo.push_back({"X" + std::to_string(i + 1), range_of(draw.between(2, max_range))});
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  draw.shuffle(order);

  std::vector<Expr> functions(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t var = order[pos];
    std::vector<std::size_t> earlier(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(pos));
    draw.shuffle(earlier);
    earlier.resize(draw.between(0, std::min(pos, params.max_parents)));
    std::sort(earlier.begin(), earlier.end());

    std::vector<VarRef> args;
    std::vector<const std::vector<Value>*> ranges;
    for (std::size_t u = 0; u < exo.size(); ++u) {
      args.push_back({VarKind::Exogenous, u});
      ranges.push_back(&exo[u].range);
    }
    for (auto p : earlier) {
      args.push_back({VarKind::Endogenous, p});
      ranges.push_back(&endo[p].range);
    }
    functions[var] = table(draw, args, ranges, 0, endo[var].range);
  }

  sink = order.empty() ? 0 : order.back();
  return CausalModel("random_" + std::to_string(seed), Signature(std::move(exo), std::move(endo)),
                     std::move(functions), std::move(context));
}

}  // namespace

CausalModel random_model(const RandomModelParams& params, std::uint64_t seed) {
  std::size_t sink = 0;
  return generate(params, seed, sink);
}

RandomInstance random_instance(const RandomModelParams& params, std::uint64_t seed) {
  std::size_t sink = 0;
  CausalModel model = generate(params, seed, sink);
  Matrix phi = fm::atom(sink, model.solution()[sink]);
  return {seed, std::move(model), std::move(phi)};
}

}  // namespace actual_cause
