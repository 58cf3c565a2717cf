#include "rellaws/census.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "rellaws/enumerate.hpp"

namespace rellaws {

namespace {

// Accumulates one partition. Consecutive relations often share a vector, so
// the last key is cached in front of the hash map.
class PartialCensus {
public:
  void add(std::uint32_t v) {
    if (v == last_key_ && last_count_) {
      ++*last_count_;
      return;
    }
    last_key_ = v;
    last_count_ = &counts_[v];
    ++*last_count_;
  }
  void merge_into(std::map<std::uint32_t, std::uint64_t>& out) const {
    for (auto [v, c] : counts_) out[v] += c;
  }

private:
  std::unordered_map<std::uint32_t, std::uint64_t> counts_;
  std::uint32_t last_key_ = 0;
  std::uint64_t* last_count_ = nullptr;
};

// Partition depth giving a few hundred to a few thousand work items.
int partition_depth(int n) { return n <= 2 ? 0 : (n <= 4 ? 1 : 2); }

template <typename PerPartition>
void for_each_partition(int n, bool pruned, Execution exec, PerPartition&& body) {
  const int depth = partition_depth(n);
  if (pruned) {
    const NormalForms forms(n);
    const auto prefixes = forms.prefixes(depth);
    const auto count = static_cast<std::int64_t>(prefixes.size());
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < count; ++i)
        body([&](auto&& visit) { return forms.run_prefix(prefixes[i], visit); });
    } else {
      for (std::int64_t i = 0; i < count; ++i)
        body([&](auto&& visit) { return forms.run_prefix(prefixes[i], visit); });
    }
  } else {
    const AllRelations all(n);
    const auto count = static_cast<std::int64_t>(all.partition_count(depth));
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < count; ++i)
        body([&](auto&& visit) { return all.run_partition(depth, i, visit); });
    } else {
      for (std::int64_t i = 0; i < count; ++i)
        body([&](auto&& visit) { return all.run_partition(depth, i, visit); });
    }
  }
}

}  // namespace

std::uint64_t VectorCensus::total() const {
  std::uint64_t sum = 0;
  for (auto [v, c] : counts) sum += c;
  return sum;
}

std::vector<std::uint32_t> VectorCensus::inhabited() const {
  std::vector<std::uint32_t> out;
  out.reserve(counts.size());
  for (auto [v, c] : counts)
    if (c > 0) out.push_back(v);
  return out;
}

void VectorCensus::merge(const VectorCensus& other) {
  for (auto [v, c] : other.counts) counts[v] += c;
}

std::uint64_t count_relations(int n, bool pruned, Execution exec) {
  check_cardinality(n);
  std::uint64_t total = 0;
  for_each_partition(n, pruned, exec, [&](auto&& run) {
    const std::uint64_t visited = run([](const Relation&) {});
#pragma omp atomic
    total += visited;
  });
  return total;
}

VectorCensus vector_census(int n, bool pruned, Execution exec) {
  check_cardinality(n);
  VectorCensus census{n, pruned, {}};
  for_each_partition(n, pruned, exec, [&](auto&& run) {
    PartialCensus partial;
    run([&](const Relation& r) { partial.add(property_vector(r).bits); });
#pragma omp critical(rellaws_census_merge)
    partial.merge_into(census.counts);
  });
  return census;
}

PropertyCounts property_counts(const VectorCensus& census) {
  PropertyCounts out{};
  for (auto [v, c] : census.counts)
    for (int b = 0; b < kVectorProperties; ++b)
      if (v & (1u << b)) out[b] += c;
  return out;
}

PropertyCounts property_census(int n, bool pruned, Execution exec) {
  return property_counts(vector_census(n, pruned, exec));
}

void write_census(std::ostream& out, const VectorCensus& census) {
  out << "relcensus v1 n=" << census.n << " pruned=" << (census.pruned ? 1 : 0)
      << " props=" << kVectorProperties << '\n';
  char buf[32];
  for (auto [v, c] : census.counts) {
    if (c == 0) continue;
    std::snprintf(buf, sizeof buf, "%06x", v);
    out << buf << ',' << c << '\n';
  }
}

VectorCensus read_census(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("census: missing header");
  VectorCensus census;
  int n = 0, pruned = 0, props = 0;
  char tail = 0;
  if (std::sscanf(header.c_str(), "relcensus v1 n=%d pruned=%d props=%d%c", &n,
                  &pruned, &props, &tail) != 3 ||
      (pruned != 0 && pruned != 1) || props != kVectorProperties)
    throw std::runtime_error("census: bad header '" + header + "'");
  check_cardinality(n);
  census.n = n;
  census.pruned = pruned == 1;

  std::uint32_t previous = 0;
  bool first = true;
  int line_no = 1;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma != 6) throw std::runtime_error("census line " + std::to_string(line_no) + ": expected '<6 hex>,<count>'");
    std::size_t used = 0;
    unsigned long v = 0;
    unsigned long long c = 0;
    try {
      v = std::stoul(line.substr(0, 6), &used, 16);
      if (used != 6) throw std::invalid_argument("hex");
      c = std::stoull(line.substr(7), &used, 10);
      if (used != line.size() - 7) throw std::invalid_argument("count");
    } catch (const std::exception&) {
      throw std::runtime_error("census line " + std::to_string(line_no) + ": malformed '" + line + "'");
    }
    if (v > kVectorMask)
      throw std::runtime_error("census line " + std::to_string(line_no) + ": vector exceeds 24 bits");
    if (!first && v <= previous)
      throw std::runtime_error("census line " + std::to_string(line_no) + ": vectors not strictly ascending");
    if (c == 0)
      throw std::runtime_error("census line " + std::to_string(line_no) + ": zero count");
    census.counts.emplace(static_cast<std::uint32_t>(v), c);
    previous = static_cast<std::uint32_t>(v);
    first = false;
  }
  return census;
}

}  // namespace rellaws
