#include "footcast/binio.hpp"

#include <array>
#include <bit>

#include "footcast/errors.hpp"

namespace footcast {

namespace {

std::array<std::uint32_t, 256> build_crc_table() {
  std::array<std::uint32_t, 256> table{};
  for (std::uint32_t i = 0; i < 256; ++i) {
    std::uint32_t c = i;
    for (int bit = 0; bit < 8; ++bit) {
      c = (c & 1u) ? (0xEDB88320u ^ (c >> 1)) : (c >> 1);
    }
    table[i] = c;
  }
  return table;
}

}  // namespace

std::uint32_t crc32(std::span<const std::uint8_t> bytes) {
  static const auto table = build_crc_table();
  std::uint32_t crc = 0xFFFFFFFFu;
  for (std::uint8_t byte : bytes) {
    crc = table[(crc ^ byte) & 0xFFu] ^ (crc >> 8);
  }
  return crc ^ 0xFFFFFFFFu;
}

void BinaryWriter::put_u8(std::uint8_t v) { bytes_.push_back(v); }

void BinaryWriter::put_u32(std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) {
    bytes_.push_back(static_cast<std::uint8_t>((v >> shift) & 0xFFu));
  }
}

void BinaryWriter::put_u64(std::uint64_t v) {
  for (int shift = 0; shift < 64; shift += 8) {
    bytes_.push_back(static_cast<std::uint8_t>((v >> shift) & 0xFFu));
  }
}

void BinaryWriter::put_i64(std::int64_t v) { put_u64(static_cast<std::uint64_t>(v)); }

void BinaryWriter::put_f64(double v) { put_u64(std::bit_cast<std::uint64_t>(v)); }

void BinaryWriter::put_string(std::string_view s) {
  put_u32(static_cast<std::uint32_t>(s.size()));
  bytes_.insert(bytes_.end(), s.begin(), s.end());
}

void BinaryWriter::put_f64_span(std::span<const double> values) {
  put_u64(values.size());
  for (double v : values) put_f64(v);
}

void BinaryReader::need(std::size_t n) const {
  if (pos_ + n > bytes_.size()) throw DataError("truncated binary payload");
}

std::uint8_t BinaryReader::get_u8() {
  need(1);
  return bytes_[pos_++];
}

std::uint32_t BinaryReader::get_u32() {
  need(4);
  std::uint32_t v = 0;
  for (int shift = 0; shift < 32; shift += 8) {
    v |= static_cast<std::uint32_t>(bytes_[pos_++]) << shift;
  }
  return v;
}

std::uint64_t BinaryReader::get_u64() {
  need(8);
  std::uint64_t v = 0;
  for (int shift = 0; shift < 64; shift += 8) {
    v |= static_cast<std::uint64_t>(bytes_[pos_++]) << shift;
  }
  return v;
}

std::int64_t BinaryReader::get_i64() { return static_cast<std::int64_t>(get_u64()); }

double BinaryReader::get_f64() { return std::bit_cast<double>(get_u64()); }

std::string BinaryReader::get_string() {
  const std::uint32_t size = get_u32();
  need(size);
  std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), size);
  pos_ += size;
  return s;
}

std::vector<double> BinaryReader::get_f64_vector(std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(get_f64());
  return out;
}

}  // namespace footcast
