#include "tramp/audio.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <sstream>

#include "tramp/errors.hpp"

namespace tramp {

void AudioBuffer::validate() const {
  if (sample_rate <= 0) throw ConfigError("sample rate must be positive");
  if (channels.empty()) throw ConfigError("audio buffer has no channels");
  const std::size_t n = channels.front().size();
  for (const auto& ch : channels) {
    if (ch.size() != n) throw ConfigError("audio channels differ in length");
  }
}

AudioBuffer AudioBuffer::zeros(int sample_rate, std::size_t channels, std::size_t frames) {
  AudioBuffer b;
  b.sample_rate = sample_rate;
  b.channels.assign(channels, std::vector<double>(frames, 0.0));
  return b;
}

EncodingMatrix::EncodingMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ != 4) throw ConfigError("encoding matrix must have 4 rows, got " + std::to_string(rows_));
  if (cols_ == 0) throw ConfigError("encoding matrix has no columns");
  if (entries_.size() != rows_ * cols_) {
    throw ConfigError("encoding matrix expects " + std::to_string(rows_ * cols_) + " entries, got " +
                      std::to_string(entries_.size()));
  }
}

EncodingMatrix EncodingMatrix::identity(std::size_t n) {
  std::vector<double> e(4 * n, 0.0);
  for (std::size_t i = 0; i < std::min<std::size_t>(4, n); ++i) e[i * n + i] = 1.0;
  return EncodingMatrix(4, n, std::move(e));
}

EncodingMatrix EncodingMatrix::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open encoding matrix '" + path + "'");
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw ConfigError("encoding matrix '" + path + "': missing 'rows cols' header");
  std::vector<double> entries;
  entries.reserve(rows * cols);
  double v = 0.0;
  while (in >> v) entries.push_back(v);
  if (!in.eof()) throw ConfigError("encoding matrix '" + path + "': non-numeric entry");
  try {
    return EncodingMatrix(rows, cols, std::move(entries));
  } catch (const ConfigError& e) {
    throw ConfigError("encoding matrix '" + path + "': " + e.what());
  }
}

AudioBuffer encode_foa(const AudioBuffer& buffer, const EncodingMatrix& matrix) {
  buffer.validate();
  if (matrix.cols() != buffer.channel_count()) {
    throw ConfigError("encoding matrix has " + std::to_string(matrix.cols()) + " columns but audio has " +
                      std::to_string(buffer.channel_count()) + " channels");
  }
  const std::size_t n = buffer.frame_count();
  AudioBuffer out = AudioBuffer::zeros(buffer.sample_rate, 4, n);
  for (std::size_t r = 0; r < 4; ++r) {
    auto& dst = out.channels[r];
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      const double g = matrix(r, c);
      if (g == 0.0) continue;
      const auto& src = buffer.channels[c];
      for (std::size_t i = 0; i < n; ++i) dst[i] += g * src[i];
    }
  }
  return out;
}

// ---- WAV ------------------------------------------------------------------

namespace {

static_assert(std::endian::native == std::endian::little, "WAV I/O assumes a little-endian host");

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

template <typename T>
T read_le(const char* p) {
  T v;
  std::memcpy(&v, p, sizeof(T));
  return v;
}

template <typename T>
void write_le(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

std::size_t bytes_per_sample(SampleFormat f) {
  switch (f) {
    case SampleFormat::pcm16: return 2;
    case SampleFormat::pcm24: return 3;
    case SampleFormat::pcm32: return 4;
    case SampleFormat::float32: return 4;
  }
  return 0;
}

double decode_sample(const char* p, SampleFormat f) {
  switch (f) {
    case SampleFormat::pcm16: return read_le<std::int16_t>(p) / 32768.0;
    case SampleFormat::pcm24: {
      const auto* u = reinterpret_cast<const unsigned char*>(p);
      std::int32_t v = static_cast<std::int32_t>(u[0]) | (static_cast<std::int32_t>(u[1]) << 8) |
                       (static_cast<std::int32_t>(u[2]) << 16);
      if (v & 0x800000) v -= 0x1000000;
      return v / 8388608.0;
    }
    case SampleFormat::pcm32: return read_le<std::int32_t>(p) / 2147483648.0;
    case SampleFormat::float32: return static_cast<double>(read_le<float>(p));
  }
  return 0.0;
}

}  // namespace

WavReader::WavReader(const std::string& path) : path_(path), in_(path, std::ios::binary) {
  if (!in_) throw IoError("cannot open WAV file '" + path + "'");
  char header[12];
  if (!in_.read(header, 12) || std::memcmp(header, "RIFF", 4) != 0 || std::memcmp(header + 8, "WAVE", 4) != 0) {
    throw IoError("'" + path + "' is not a RIFF/WAVE file");
  }
  bool have_fmt = false;
  std::uint16_t format_tag = 0, bits = 0;
  for (;;) {
    char chunk[8];
    if (!in_.read(chunk, 8)) throw IoError("'" + path + "': no data chunk");
    const auto size = read_le<std::uint32_t>(chunk + 4);
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16) throw IoError("'" + path + "': truncated fmt chunk");
      std::vector<char> fmt(size + (size & 1));
      if (!in_.read(fmt.data(), static_cast<std::streamsize>(fmt.size()))) {
        throw IoError("'" + path + "': truncated fmt chunk");
      }
      format_tag = read_le<std::uint16_t>(fmt.data());
      info_.channels = read_le<std::uint16_t>(fmt.data() + 2);
      info_.sample_rate = static_cast<int>(read_le<std::uint32_t>(fmt.data() + 4));
      bits = read_le<std::uint16_t>(fmt.data() + 14);
      if (format_tag == kFormatExtensible && size >= 40) {
        // First two bytes of the subformat GUID carry the actual format tag.
        format_tag = read_le<std::uint16_t>(fmt.data() + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      if (!have_fmt) throw IoError("'" + path + "': data chunk before fmt chunk");
      if (format_tag == kFormatPcm && bits == 16) {
        info_.format = SampleFormat::pcm16;
      } else if (format_tag == kFormatPcm && bits == 24) {
        info_.format = SampleFormat::pcm24;
      } else if (format_tag == kFormatPcm && bits == 32) {
        info_.format = SampleFormat::pcm32;
      } else if (format_tag == kFormatFloat && bits == 32) {
        info_.format = SampleFormat::float32;
      } else {
        throw IoError("'" + path + "': unsupported sample format (tag " + std::to_string(format_tag) + ", " +
                      std::to_string(bits) + " bits)");
      }
      if (info_.channels <= 0 || info_.sample_rate <= 0) throw IoError("'" + path + "': invalid fmt chunk");
      const std::size_t frame_bytes = bytes_per_sample(info_.format) * static_cast<std::size_t>(info_.channels);
      info_.frames = size / frame_bytes;
      remaining_ = info_.frames;
      return;
    } else {
      in_.seekg(size + (size & 1), std::ios::cur);
    }
  }
}

std::size_t WavReader::read(std::size_t max_frames, std::vector<std::vector<double>>& out) {
  const auto channels = static_cast<std::size_t>(info_.channels);
  out.resize(channels);
  const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(max_frames, remaining_));
  if (n == 0) return 0;
  const std::size_t bps = bytes_per_sample(info_.format);
  raw_.resize(n * bps * channels);
  in_.read(raw_.data(), static_cast<std::streamsize>(raw_.size()));
  const auto got = static_cast<std::size_t>(in_.gcount()) / (bps * channels);
  if (got < n) throw IoError("'" + path_ + "': truncated sample data");
  for (auto& ch : out) ch.reserve(ch.size() + n);
  const char* p = raw_.data();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < channels; ++c, p += bps) out[c].push_back(decode_sample(p, info_.format));
  }
  remaining_ -= n;
  return n;
}

AudioBuffer read_wav(const std::string& path) {
  WavReader reader(path);
  AudioBuffer buffer;
  buffer.sample_rate = reader.info().sample_rate;
  buffer.channels.resize(static_cast<std::size_t>(reader.info().channels));
  for (auto& ch : buffer.channels) ch.reserve(reader.info().frames);
  while (reader.read(1 << 16, buffer.channels) > 0) {
  }
  return buffer;
}

void write_wav(const std::string& path, const AudioBuffer& buffer) {
  buffer.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  const auto channels = static_cast<std::uint16_t>(buffer.channel_count());
  const std::uint64_t data_bytes = buffer.frame_count() * channels * 4ULL;
  if (data_bytes > std::numeric_limits<std::uint32_t>::max() - 36) {
    throw IoError("'" + path + "': audio too long for a RIFF file");
  }
  out.write("RIFF", 4);
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(36 + data_bytes));
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_le<std::uint32_t>(out, 16);
  write_le<std::uint16_t>(out, kFormatFloat);
  write_le<std::uint16_t>(out, channels);
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(buffer.sample_rate));
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(buffer.sample_rate) * channels * 4U);
  write_le<std::uint16_t>(out, static_cast<std::uint16_t>(channels * 4));
  write_le<std::uint16_t>(out, 32);
  out.write("data", 4);
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(data_bytes));
  std::vector<float> interleaved(static_cast<std::size_t>(channels) * 4096);
  for (std::size_t start = 0; start < buffer.frame_count(); start += 4096) {
    const std::size_t n = std::min<std::size_t>(4096, buffer.frame_count() - start);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < channels; ++c) {
        interleaved[i * channels + c] = static_cast<float>(buffer.channels[c][start + i]);
      }
    }
    out.write(reinterpret_cast<const char*>(interleaved.data()),
              static_cast<std::streamsize>(n * channels * sizeof(float)));
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace tramp
