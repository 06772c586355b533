#include "nilcount/stirling_cache.hpp"

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <vector>

#include "nilcount/stirling.hpp"

namespace nilcount {

namespace {

constexpr char kMagic[8] = {'N', 'I', 'L', 'S', 'T', 'I', 'R', '\x01'};

void write_u32(std::ostream& out, uint32_t value) {
  unsigned char bytes[4] = {static_cast<unsigned char>(value >> 24),
                            static_cast<unsigned char>(value >> 16),
                            static_cast<unsigned char>(value >> 8),
                            static_cast<unsigned char>(value)};
  out.write(reinterpret_cast<const char*>(bytes), 4);
}

bool read_u32(std::istream& in, uint32_t& value) {
  unsigned char bytes[4];
  if (!in.read(reinterpret_cast<char*>(bytes), 4)) {
    return false;
  }
  value = (static_cast<uint32_t>(bytes[0]) << 24) | (static_cast<uint32_t>(bytes[1]) << 16) |
          (static_cast<uint32_t>(bytes[2]) << 8) | static_cast<uint32_t>(bytes[3]);
  return true;
}

void write_bigint(std::ostream& out, const BigInt& value) {
  std::vector<unsigned char> bytes;
  if (value != 0) {
    boost::multiprecision::export_bits(value, std::back_inserter(bytes), 8);
  }
  write_u32(out, static_cast<uint32_t>(bytes.size()));
  if (!bytes.empty()) {
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<long>(bytes.size()));
  }
}

bool read_bigint(std::istream& in, BigInt& value) {
  uint32_t length = 0;
  if (!read_u32(in, length)) {
    return false;
  }
  if (length == 0) {
    value = 0;
    return true;
  }
  std::vector<unsigned char> bytes(length);
  if (!in.read(reinterpret_cast<char*>(bytes.data()), static_cast<long>(length))) {
    return false;
  }
  boost::multiprecision::import_bits(value, bytes.begin(), bytes.end(), 8);
  return true;
}

std::string validate_rows(const std::vector<std::vector<BigInt>>& rows, bool full) {
  const long max_n = static_cast<long>(rows.size()) - 1;
  for (long n = 0; n <= max_n; ++n) {
    auto const& row = rows[static_cast<size_t>(n)];
    if (static_cast<long>(row.size()) != n + 1) {
      return "row " + std::to_string(n) + " has wrong length";
    }
    if (row[static_cast<size_t>(n)] != 1) {
      return "diagonal entry at n=" + std::to_string(n) + " is not 1";
    }
    if (n > 0 && row[0] != 0) {
      return "column-zero entry at n=" + std::to_string(n) + " is not 0";
    }
  }
  auto check = [&](long n, long k) -> bool {
    const BigInt& expected = rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
    BigInt recomputed = k * rows[static_cast<size_t>(n - 1)][static_cast<size_t>(k)] +
                        rows[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)];
    return expected == recomputed;
  };
  for (long n = 2; n <= max_n; ++n) {
    if (full) {
      for (long k = 1; k < n; ++k) {
        if (!check(n, k)) {
          return "recurrence fails at n=" + std::to_string(n) + ", k=" + std::to_string(k);
        }
      }
    } else {
      // Sampled diagonal: one midpoint per row.
      long k = (n + 1) / 2;
      if (k >= 1 && k < n && !check(n, k)) {
        return "recurrence fails at n=" + std::to_string(n) + ", k=" + std::to_string(k);
      }
    }
  }
  return {};
}

}  // namespace

CacheStatus save_stirling_cache(const std::string& path, long max_n) {
  CacheStatus status;
  if (max_n < 0) {
    status.error = "max_n must be non-negative";
    return status;
  }
  stirling_table().ensure(max_n);
  auto rows = stirling_table().snapshot();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    status.error = "cannot open '" + path + "' for writing";
    return status;
  }
  out.write(kMagic, sizeof(kMagic));
  write_u32(out, static_cast<uint32_t>(rows.size()));
  for (auto const& row : rows) {
    for (auto const& value : row) {
      write_bigint(out, value);
    }
  }
  out.flush();
  if (!out) {
    status.error = "write failure on '" + path + "'";
    return status;
  }
  status.ok = true;
  status.max_n = static_cast<long>(rows.size()) - 1;
  return status;
}

CacheStatus load_stirling_cache(const std::string& path, bool full_validation) {
  CacheStatus status;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    status.error = "cannot open '" + path + "'";
    return status;
  }
  char magic[sizeof(kMagic)];
  if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    status.error = "bad magic in '" + path + "'";
    return status;
  }
  uint32_t row_count = 0;
  if (!read_u32(in, row_count) || row_count == 0 || row_count > 100000) {
    status.error = "bad row count in '" + path + "'";
    return status;
  }
  std::vector<std::vector<BigInt>> rows(row_count);
  for (uint32_t n = 0; n < row_count; ++n) {
    rows[n].resize(n + 1);
    for (uint32_t k = 0; k <= n; ++k) {
      if (!read_bigint(in, rows[n][k])) {
        status.error = "truncated entry at n=" + std::to_string(n);
        return status;
      }
    }
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    status.error = "trailing bytes in '" + path + "'";
    return status;
  }
  if (auto why = validate_rows(rows, full_validation); !why.empty()) {
    status.error = why;
    return status;
  }
  status.max_n = static_cast<long>(row_count) - 1;
  stirling_table().replace(std::move(rows));
  status.ok = true;
  return status;
}

CacheStatus clear_stirling_cache(const std::string& path) {
  CacheStatus status;
  std::error_code ec;
  std::filesystem::remove(path, ec);
  if (ec) {
    status.error = ec.message();
    return status;
  }
  stirling_table().reset();
  status.ok = true;
  return status;
}

}  // namespace nilcount
