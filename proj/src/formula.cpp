#include "rodt/formula.hpp"

#include "rodt/rng.hpp"

#include <stdexcept>
#include <string>

namespace rodt {

namespace {

void check_gate(int k, int n) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("gate needs 1 <= k <= n, got k=" +
                                std::to_string(k) + " n=" + std::to_string(n));
}

}  // namespace

FormulaSpec FormulaSpec::constant(int k, int n, int depth) {
  check_gate(k, n);
  if (depth < 0) throw std::invalid_argument("negative depth");
  FormulaSpec f;
  f.schedule = Schedule::Constant;
  f.depth = depth;
  f.gate = GateSpec{k, n};
  f.fanout = n;
  f.root_kind = (k == n) ? GateKind::AND : GateKind::OR;
  return f;
}

FormulaSpec FormulaSpec::alternating(int n, GateKind root_kind, int depth) {
  if (n < 1) throw std::invalid_argument("fan-out must be >= 1");
  if (depth < 0) throw std::invalid_argument("negative depth");
  FormulaSpec f;
  f.schedule = Schedule::Alternating;
  f.depth = depth;
  f.fanout = n;
  f.root_kind = root_kind;
  f.gate = GateSpec{root_kind == GateKind::AND ? n : 1, n};
  return f;
}

GateSpec FormulaSpec::gate_at_level(int level) const {
  if (level < 0 || level >= depth)
    throw std::invalid_argument("gate level out of range");
  if (schedule == Schedule::Constant) return gate;
  GateKind kind = root_kind;
  if (level % 2 == 1)
    kind = (root_kind == GateKind::AND) ? GateKind::OR : GateKind::AND;
  return GateSpec{kind == GateKind::AND ? fanout : 1, fanout};
}

int FormulaSpec::gate_fanout() const { return fanout; }

BigInt FormulaSpec::leaf_count() const {
  BigInt total = 1;
  for (int i = 0; i < depth; ++i) total *= fanout;
  return total;
}

std::size_t FormulaSpec::leaf_count_checked(std::size_t cap) const {
  BigInt total = leaf_count();
  if (total > cap)
    throw std::length_error("formula has " + total.str() +
                            " leaves, cap is " + std::to_string(cap));
  return total.convert_to<std::size_t>();
}

std::string assignment_str(const Assignment& a) {
  std::string s;
  s.reserve(a.bits.size());
  for (auto b : a.bits) s.push_back(b ? '1' : '0');
  return s;
}

Assignment parse_assignment(const std::string& s) {
  Assignment a;
  a.bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("assignment must be a 0/1 string");
    a.bits.push_back(c == '1');
  }
  return a;
}

namespace {

// Width of the leaf segment under one node at a level of internal nodes.
std::size_t subtree_width(const FormulaSpec& f, int level) {
  std::size_t w = 1;
  for (int i = level; i < f.depth; ++i) w *= std::size_t(f.fanout);
  return w;
}

int eval_rec(const FormulaSpec& f, const Assignment& a, int level,
             std::size_t base) {
  if (level == f.depth) return a.bits[base];
  GateSpec g = f.gate_at_level(level);
  std::size_t child_width = subtree_width(f, level + 1);
  int ones = 0;
  for (int j = 0; j < g.n; ++j)
    ones += eval_rec(f, a, level + 1, base + std::size_t(j) * child_width);
  return ones >= g.k ? 1 : 0;
}

// Root value if every gate below sees exactly k or k-1 ones, else nullopt.
std::optional<int> reluctant_value(const FormulaSpec& f, const Assignment& a,
                                   int level, std::size_t base) {
  if (level == f.depth) return int(a.bits[base]);
  GateSpec g = f.gate_at_level(level);
  std::size_t child_width = subtree_width(f, level + 1);
  int ones = 0;
  for (int j = 0; j < g.n; ++j) {
    auto v = reluctant_value(f, a, level + 1, base + std::size_t(j) * child_width);
    if (!v) return std::nullopt;
    ones += *v;
  }
  if (ones == g.k) return 1;
  if (ones == g.k - 1) return 0;
  return std::nullopt;
}

void check_length(const FormulaSpec& f, const Assignment& a) {
  if (BigInt(a.bits.size()) != f.leaf_count())
    throw std::invalid_argument("assignment has " +
                                std::to_string(a.bits.size()) +
                                " bits, formula expects " +
                                f.leaf_count().str());
}

}  // namespace

int evaluate(const FormulaSpec& f, const Assignment& a) {
  check_length(f, a);
  return eval_rec(f, a, 0, 0);
}

bool is_reluctant(const FormulaSpec& f, const Assignment& a) {
  check_length(f, a);
  return reluctant_value(f, a, 0, 0).has_value();
}

namespace {

// Counts for the subtree rooted at a node of the given level, by value.
// Level f.depth is a bare variable: one input per value.
std::pair<BigInt, BigInt> counts_at_level(const FormulaSpec& f, int level) {
  if (level == f.depth) return {1, 1};
  auto [c0, c1] = counts_at_level(f, level + 1);
  GateSpec g = f.gate_at_level(level);
  BigInt n1 = binomial(g.n, g.k) * pow(c1, unsigned(g.k)) *
              pow(c0, unsigned(g.n - g.k));
  BigInt n0 = binomial(g.n, g.k - 1) * pow(c1, unsigned(g.k - 1)) *
              pow(c0, unsigned(g.n - g.k + 1));
  return {n0, n1};
}

void sample_rec(const FormulaSpec& f, int level, std::uint64_t node_id,
                int value, std::uint64_t seed, std::size_t base,
                Assignment& out) {
  if (level == f.depth) {
    out.bits[base] = std::uint8_t(value);
    return;
  }
  GateSpec g = f.gate_at_level(level);
  int ones = value ? g.k : g.k - 1;
  SplitMix64 gen(derive_seed(seed, node_id));
  std::vector<int> one_children = choose_k_of_n(gen, g.n, ones);
  std::size_t child_width = subtree_width(f, level + 1);
  std::size_t next = 0;
  for (int j = 0; j < g.n; ++j) {
    int child_value =
        (next < one_children.size() && one_children[next] == j) ? 1 : 0;
    if (child_value) ++next;
    sample_rec(f, level + 1, node_id * std::uint64_t(g.n) + 1 + std::uint64_t(j),
               child_value, seed, base + std::size_t(j) * child_width, out);
  }
}

// Lexicographically next size-|pick| subset of {0..n-1}; false when done.
bool next_combination(std::vector<int>& pick, int n) {
  int m = int(pick.size());
  for (int i = m - 1; i >= 0; --i) {
    if (pick[i] < n - (m - i)) {
      ++pick[i];
      for (int t = i + 1; t < m; ++t) pick[t] = pick[t - 1] + 1;
      return true;
    }
  }
  return false;
}

struct EnumJob {
  int level;
  std::size_t base;
  int value;
};

// Fills the pending jobs in all reluctant ways; emits the buffer once per
// complete combination. All child-value patterns with the required number of
// ones carry equal weight, so subset enumeration is exhaustive and
// duplicate-free.
void enum_jobs(const FormulaSpec& f, std::vector<EnumJob>& stack,
               Assignment& buffer, std::vector<Assignment>& out) {
  if (stack.empty()) {
    out.push_back(buffer);
    return;
  }
  EnumJob job = stack.back();
  stack.pop_back();
  if (job.level == f.depth) {
    buffer.bits[job.base] = std::uint8_t(job.value);
    enum_jobs(f, stack, buffer, out);
  } else {
    GateSpec g = f.gate_at_level(job.level);
    int ones = job.value ? g.k : g.k - 1;
    std::size_t child_width = subtree_width(f, job.level + 1);
    std::vector<int> pick(ones);
    for (int i = 0; i < ones; ++i) pick[i] = i;
    do {
      std::size_t mark = stack.size();
      for (int j = g.n - 1; j >= 0; --j) {
        // pushed in reverse so children fill left-to-right
        int child_value = 0;
        for (int p : pick)
          if (p == j) child_value = 1;
        stack.push_back(EnumJob{job.level + 1,
                                job.base + std::size_t(j) * child_width,
                                child_value});
      }
      enum_jobs(f, stack, buffer, out);
      stack.resize(mark);
    } while (next_combination(pick, g.n));
  }
  stack.push_back(job);
}

}  // namespace

ReluctantCounts reluctant_counts(const FormulaSpec& f) {
  auto [n0, n1] = counts_at_level(f, 0);
  return ReluctantCounts{n0, n1};
}

Assignment sample_reluctant(const FormulaSpec& f, std::uint64_t seed,
                            std::optional<int> condition) {
  std::size_t leaves = f.leaf_count_checked(std::size_t(1) << 30);
  Assignment a;
  a.bits.assign(leaves, 0);
  int value;
  if (condition) {
    if (*condition != 0 && *condition != 1)
      throw std::invalid_argument("condition must be 0 or 1");
    value = *condition;
  } else {
    ReluctantCounts counts = reluctant_counts(f);
    SplitMix64 gen(derive_seed(seed, 0xb1a5ULL));
    value = bernoulli_exact(gen, counts.n1, counts.n0 + counts.n1) ? 1 : 0;
  }
  sample_rec(f, 0, 0, value, seed, 0, a);
  return a;
}

std::vector<Assignment> enumerate_reluctant(const FormulaSpec& f,
                                            std::uint64_t cap) {
  ReluctantCounts counts = reluctant_counts(f);
  BigInt total = counts.n0 + counts.n1;
  if (total > cap)
    throw std::length_error("reluctant input count " + total.str() +
                            " exceeds cap " + std::to_string(cap));
  std::size_t leaves = f.leaf_count_checked(std::size_t(1) << 30);
  std::vector<Assignment> out;
  out.reserve(total.convert_to<std::size_t>());
  Assignment buffer;
  buffer.bits.assign(leaves, 0);
  for (int value : {0, 1}) {
    std::vector<EnumJob> stack{EnumJob{0, 0, value}};
    enum_jobs(f, stack, buffer, out);
  }
  return out;
}

}  // namespace rodt
