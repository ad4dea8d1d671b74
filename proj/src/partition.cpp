#include "tsf/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace tsf {

Rational parse_rational(const std::string &text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty())
    return Partition{};
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto field = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument &e) {
    throw std::invalid_argument("malformed partition '" + std::string(text) + "': " + e.what());
  }
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0)
      out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Truncation Truncation::finite(int d) {
  if (d < 1)
    throw std::invalid_argument("truncation degree must be >= 1");
  Truncation t;
  t.value_ = d;
  return t;
}

Truncation Truncation::parse(std::string_view text) {
  if (text == "inf")
    return infinity();
  int d = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || d < 1)
    throw std::invalid_argument("truncation must be a positive integer or 'inf', got '" +
                                std::string(text) + "'");
  return finite(d);
}

int Truncation::value() const {
  if (!value_)
    throw std::logic_error("infinite truncation has no finite value");
  return *value_;
}

int Truncation::cap(int bound) const { return value_ ? std::min(*value_, bound) : bound; }

std::string Truncation::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

namespace {

void generate(int remaining, int max_part, std::vector<int> &prefix, std::vector<Partition> &out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    generate(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

const std::vector<Partition> &partitions_of(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<Partition>>> cache;
  std::lock_guard lock(mutex);
  auto &slot = cache[n];
  if (!slot) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(n, n, prefix, out);
    slot = std::make_unique<const std::vector<Partition>>(std::move(out));
  }
  return *slot;
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0)
    throw std::invalid_argument("cannot enumerate partitions of a negative integer");
  return partitions_of(n);
}

std::size_t partition_index(const Partition &lambda) {
  const auto &all = partitions_of(lambda.weight());
  auto it = std::lower_bound(all.begin(), all.end(), lambda, std::greater<>());
  return static_cast<std::size_t>(it - all.begin());
}

std::size_t partition_count(int n) { return n < 0 ? 0 : partitions_of(n).size(); }

Partition conjugate(const Partition &lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j)
      ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

Integer z(const Partition &lambda) {
  Integer result = 1;
  const auto &parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i])
      ++j;
    auto count = static_cast<unsigned long>(j - i);
    Integer power, factorial;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), count);
    mpz_fac_ui(factorial.get_mpz_t(), count);
    result *= power * factorial;
    i = j;
  }
  return result;
}

int epsilon(const Partition &lambda) {
  return (lambda.weight() - lambda.length()) % 2 == 0 ? 1 : -1;
}

Integer d_coefficient(const Partition &lambda, Truncation d) {
  if (d.is_infinite())
    return 1;
  int period = d.value() + 1;
  auto exponent = static_cast<unsigned long>(
      std::count_if(lambda.parts().begin(), lambda.parts().end(),
                    [period](int part) { return part % period == 0; }));
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(d.value()), exponent);
  return exponent % 2 == 0 ? result : Integer(-result);
}

namespace {

// Remaining parts of mu tracked as a multiplicity table indexed by part size.
void refine(const Partition &lambda, std::size_t slot, std::vector<int> &available,
            std::vector<Partition> &tuple, std::vector<std::vector<Partition>> &out) {
  if (slot == static_cast<std::size_t>(lambda.length())) {
    out.push_back(tuple);
    return;
  }
  for (const auto &piece : partitions_of(lambda[slot])) {
    bool fits = true;
    for (int part : piece.parts()) {
      if (--available[static_cast<std::size_t>(part)] < 0)
        fits = false;
    }
    if (fits) {
      tuple.push_back(piece);
      refine(lambda, slot + 1, available, tuple, out);
      tuple.pop_back();
    }
    for (int part : piece.parts())
      ++available[static_cast<std::size_t>(part)];
  }
}

} // namespace

std::vector<std::vector<Partition>> refinement_tuples(const Partition &lambda,
                                                      const Partition &mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("refinement requires |lambda| = |mu|");
  std::vector<int> available(static_cast<std::size_t>(mu.weight()) + 1, 0);
  for (int part : mu.parts())
    ++available[static_cast<std::size_t>(part)];
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> tuple;
  refine(lambda, 0, available, tuple, out);
  return out;
}

} // namespace tsf
