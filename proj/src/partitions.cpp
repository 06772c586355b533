#include "nilcount/partitions.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilcount/stirling.hpp"

namespace nilcount {

std::vector<int> IntegerPartition::expanded() const {
  std::vector<int> lengths;
  lengths.reserve(static_cast<size_t>(r));
  for (auto const& part : parts) {
    for (int i = 0; i < part.multiplicity; ++i) {
      lengths.push_back(part.length);
    }
  }
  return lengths;
}

std::string IntegerPartition::to_string() const {
  std::string out;
  for (auto const& part : parts) {
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(part.length) + "^" + std::to_string(part.multiplicity);
  }
  return out;
}

IntegerPartition IntegerPartition::from_lengths(const std::vector<int>& lengths) {
  std::vector<int> sorted = lengths;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  IntegerPartition result;
  for (int len : sorted) {
    if (len <= 0) {
      throw std::invalid_argument("IntegerPartition: part lengths must be positive");
    }
    if (!result.parts.empty() && result.parts.back().length == len) {
      ++result.parts.back().multiplicity;
    } else {
      result.parts.push_back({len, 1});
    }
    result.r += len;
  }
  return result;
}

IntegerPartition IntegerPartition::parse(const std::string& text) {
  std::vector<int> lengths;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    if (token.empty()) {
      throw std::invalid_argument("IntegerPartition: empty component in '" + text + "'");
    }
    size_t caret = token.find('^');
    int length = 0;
    int mult = 1;
    try {
      if (caret == std::string::npos) {
        length = std::stoi(token);
      } else {
        length = std::stoi(token.substr(0, caret));
        mult = std::stoi(token.substr(caret + 1));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("IntegerPartition: cannot parse '" + token + "'");
    }
    if (length <= 0 || mult <= 0) {
      throw std::invalid_argument("IntegerPartition: parts must be positive in '" + text + "'");
    }
    for (int i = 0; i < mult; ++i) {
      lengths.push_back(length);
    }
  }
  if (lengths.empty()) {
    throw std::invalid_argument("IntegerPartition: empty specification");
  }
  return from_lengths(lengths);
}

std::vector<IntegerPartition> partitions_of(int r) {
  if (r < 1) {
    throw std::invalid_argument("partitions_of: r must be positive");
  }
  std::vector<IntegerPartition> result;
  std::vector<int> current;
  // Descending part lists in reverse-lexicographic order: extend with the
  // largest part allowed at each position.
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      result.push_back(IntegerPartition::from_lengths(current));
      return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
      current.push_back(next);
      self(self, remaining - next, next);
      current.pop_back();
    }
  };
  recurse(recurse, r, r);
  return result;
}

BigInt weight(const IntegerPartition& lambda) {
  BigInt w = 1;
  for (auto const& part : lambda.parts) {
    w *= pow_int(part.length, static_cast<unsigned long>(part.multiplicity));
    w *= factorial(part.multiplicity);
  }
  return w;
}

}  // namespace nilcount
