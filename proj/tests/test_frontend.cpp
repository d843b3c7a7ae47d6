#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "support.hpp"
#include "tramp/audio.hpp"
#include "tramp/errors.hpp"
#include "tramp/frontend.hpp"

using namespace tramp;

namespace {

AudioBuffer random_buffer(std::size_t channels, std::size_t frames, std::uint64_t seed) {
  auto gen = test::rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  AudioBuffer b = AudioBuffer::zeros(24000, channels, frames);
  for (auto& ch : b.channels) {
    for (auto& s : ch) s = u(gen);
  }
  return b;
}

}  // namespace

TEST_CASE("encode_foa with identity matrix returns the input") {
  const AudioBuffer in = random_buffer(4, 500, 1);
  const AudioBuffer out = encode_foa(in, EncodingMatrix::identity(4));
  CHECK(out.channels == in.channels);
  CHECK(out.sample_rate == in.sample_rate);
}

TEST_CASE("encode_foa of silence is silent") {
  const AudioBuffer in = AudioBuffer::zeros(24000, 32, 256);
  auto gen = test::rng(2);
  std::normal_distribution<double> n;
  std::vector<double> e(4 * 32);
  for (auto& v : e) v = n(gen);
  const AudioBuffer out = encode_foa(in, EncodingMatrix(4, 32, e));
  REQUIRE(out.channel_count() == 4);
  for (const auto& ch : out.channels) {
    for (double s : ch) CHECK(s == 0.0);
  }
}

TEST_CASE("encode_foa matches a row-by-row dot product") {
  const AudioBuffer in = random_buffer(32, 256, 3);
  auto gen = test::rng(4);
  std::normal_distribution<double> n;
  std::vector<double> e(4 * 32);
  for (auto& v : e) v = n(gen);
  const EncodingMatrix m(4, 32, e);
  const AudioBuffer out = encode_foa(in, m);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t t = 0; t < 256; ++t) {
      double acc = 0.0;
      for (std::size_t c = 0; c < 32; ++c) acc += e[r * 32 + c] * in.channels[c][t];
      CHECK(std::abs(out.channels[r][t] - acc) <= 1e-12);
    }
  }
}

TEST_CASE("encode_foa is linear") {
  const AudioBuffer u = random_buffer(6, 300, 5);
  const AudioBuffer v = random_buffer(6, 300, 6);
  auto gen = test::rng(7);
  std::normal_distribution<double> n;
  std::vector<double> e(4 * 6);
  for (auto& x : e) x = n(gen);
  const EncodingMatrix m(4, 6, e);
  const double a = 0.7, b = -1.3;
  AudioBuffer mix = AudioBuffer::zeros(24000, 6, 300);
  for (std::size_t c = 0; c < 6; ++c) {
    for (std::size_t t = 0; t < 300; ++t) mix.channels[c][t] = a * u.channels[c][t] + b * v.channels[c][t];
  }
  const AudioBuffer lhs = encode_foa(mix, m);
  const AudioBuffer eu = encode_foa(u, m);
  const AudioBuffer ev = encode_foa(v, m);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t t = 0; t < 300; ++t) {
      CHECK(std::abs(lhs.channels[r][t] - (a * eu.channels[r][t] + b * ev.channels[r][t])) <= 1e-12);
    }
  }
}

TEST_CASE("encode_foa rejects a column count mismatch") {
  const AudioBuffer in = random_buffer(3, 10, 8);
  CHECK_THROWS_AS(encode_foa(in, EncodingMatrix::identity(4)), ConfigError);
  CHECK_THROWS_AS(EncodingMatrix(3, 4, std::vector<double>(12, 0.0)), ConfigError);
}

TEST_CASE("encoding matrix loads from text") {
  const auto dir = test::scratch_dir("frontend");
  const auto path = (dir / "m.txt").string();
  {
    std::ofstream out(path);
    out << "4 2\n1 0\n0 1\n0.5 0.5\n-1 2\n";
  }
  const EncodingMatrix m = EncodingMatrix::load(path);
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 2);
  CHECK(m(2, 1) == 0.5);
  CHECK(m(3, 0) == -1.0);
  {
    std::ofstream out(path);
    out << "4 2\n1 0 0\n";
  }
  CHECK_THROWS_AS(EncodingMatrix::load(path), ConfigError);
  CHECK_THROWS_AS(EncodingMatrix::load((dir / "missing.txt").string()), IoError);
}

TEST_CASE("real FFT matches a naive DFT on random 64-sample frames") {
  auto gen = test::rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RealFft fft(64);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(64);
    for (auto& s : x) s = u(gen);
    const auto fast = fft.forward(x);
    const auto slow = oracle::naive_dft(x);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t k = 0; k < fast.size(); ++k) CHECK(std::abs(fast[k] - slow[k]) <= 1e-9);
  }
}

TEST_CASE("Parseval holds per frame with a rectangular window") {
  auto gen = test::rng(10);
  std::normal_distribution<double> n;
  for (std::size_t size : {64u, 960u, 1000u}) {
    RealFft fft(size);
    std::vector<double> x(size);
    for (auto& s : x) s = n(gen);
    const auto spec = fft.forward(x);
    double time_energy = 0.0;
    for (double s : x) time_energy += s * s;
    double freq_energy = std::norm(spec[0]);
    for (std::size_t k = 1; k < spec.size(); ++k) {
      const bool unpaired = size % 2 == 0 && k == size / 2;
      freq_energy += (unpaired ? 1.0 : 2.0) * std::norm(spec[k]);
    }
    freq_energy /= static_cast<double>(size);
    CHECK(std::abs(freq_energy - time_energy) <= 1e-6 * time_energy);
  }
}

TEST_CASE("stft of silence is zero in every bin") {
  const auto frames = stft(AudioBuffer::zeros(24000, 4, 4800), FrontendConfig{});
  REQUIRE(!frames.empty());
  for (const auto& f : frames) {
    for (const auto& b : f.bins) {
      CHECK(b.w == Complex{});
      CHECK(b.x == Complex{});
      CHECK(b.y == Complex{});
      CHECK(b.z == Complex{});
    }
  }
}

TEST_CASE("a bin-centred cosine lands in a single retained bin") {
  FrontendConfig cfg;
  cfg.window = WindowType::rectangular;
  const int fs = 24000;
  const std::size_t n = cfg.frame_samples(fs);
  const std::size_t k = 40;  // 1000 Hz
  AudioBuffer in = AudioBuffer::zeros(fs, 4, n * 4);
  for (std::size_t t = 0; t < in.frame_count(); ++t) {
    in.channels[0][t] = std::cos(2.0 * std::numbers::pi * static_cast<double>(k * t) / static_cast<double>(n));
  }
  const auto frames = stft(in, cfg);
  REQUIRE(!frames.empty());
  for (const auto& f : frames) {
    double peak = 0.0;
    std::size_t peak_index = 0;
    for (std::size_t i = 0; i < f.bins.size(); ++i) {
      if (std::abs(f.bins[i].w) > peak) {
        peak = std::abs(f.bins[i].w);
        peak_index = i;
      }
    }
    CHECK(f.bins[peak_index].frequency == doctest::Approx(1000.0));
    for (std::size_t i = 0; i < f.bins.size(); ++i) {
      if (i != peak_index) CHECK(std::abs(f.bins[i].w) < 1e-9 * peak);
    }
  }
}

TEST_CASE("stft frames match the naive DFT of the windowed samples") {
  FrontendConfig cfg;
  cfg.frame_len = 64.0 / 24000.0;
  cfg.f_lo = 1.0;
  cfg.f_hi = 12000.0;
  const AudioBuffer in = random_buffer(4, 64 * 5, 11);
  const auto frames = stft(in, cfg);
  const std::size_t hop = cfg.hop_samples(24000);
  const auto window = make_window(WindowType::hann, 64);
  REQUIRE(frames.size() == (in.frame_count() - 64) / hop + 1);
  for (const auto& f : frames) {
    for (std::size_t c = 0; c < 4; ++c) {
      std::vector<double> x(64);
      for (std::size_t t = 0; t < 64; ++t) x[t] = in.channels[c][f.frame_index * hop + t] * window[t];
      const auto ref = oracle::naive_dft(x);
      REQUIRE(f.bins.size() == 32);  // bins 1..32
      for (std::size_t i = 0; i < f.bins.size(); ++i) {
        const auto& b = f.bins[i];
        const Complex got = c == 0 ? b.w : c == 1 ? b.x : c == 2 ? b.y : b.z;
        CHECK(std::abs(got - ref[i + 1]) <= 1e-9);
      }
    }
  }
}

TEST_CASE("retained bins are strictly increasing and inside the band") {
  StftStream s(FrontendConfig{}, 24000);
  const auto& f = s.bin_frequencies();
  REQUIRE(!f.empty());
  CHECK(f.front() >= 400.0);
  CHECK(f.back() <= 7000.0);
  for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] > f[i - 1]);
  CHECK(s.frame_samples() == 960);
  CHECK(s.hop_samples() == 480);
}

TEST_CASE("frame count and timestamps follow the hop grid") {
  FrontendConfig cfg;
  const int fs = 24000;
  const std::size_t n = cfg.frame_samples(fs);
  const std::size_t hop = cfg.hop_samples(fs);
  for (std::size_t len : {std::size_t{0}, n - 1, n, n + hop - 1, n + hop, std::size_t{24000}, std::size_t{24017}}) {
    const auto frames = stft(AudioBuffer::zeros(fs, 4, len), cfg);
    const std::size_t expected = len < n ? 0 : (len - n) / hop + 1;
    CHECK(frames.size() == expected);
    for (std::size_t i = 0; i < frames.size(); ++i) {
      CHECK(frames[i].frame_index == i);
      CHECK(frames[i].time == doctest::Approx((static_cast<double>(i * hop) + n / 2.0) / fs));
    }
  }
}

TEST_CASE("streaming in arbitrary blocks equals the whole-buffer transform") {
  const AudioBuffer in = random_buffer(4, 5000, 12);
  const auto whole = stft(in, FrontendConfig{});
  StftStream stream(FrontendConfig{}, 24000);
  std::vector<FoaSpectrum> pieces;
  const std::vector<std::size_t> blocks{1, 7, 480, 961, 13, 0};
  std::size_t pos = 0;
  for (std::size_t i = 0; pos < in.frame_count(); ++i) {
    const std::size_t take = std::min(blocks[i % blocks.size()], in.frame_count() - pos);
    std::vector<std::vector<double>> chunk(4);
    for (std::size_t c = 0; c < 4; ++c) {
      chunk[c].assign(in.channels[c].begin() + static_cast<std::ptrdiff_t>(pos),
                      in.channels[c].begin() + static_cast<std::ptrdiff_t>(pos + take));
    }
    for (auto& f : stream.push(chunk)) pieces.push_back(std::move(f));
    pos += take;
  }
  REQUIRE(pieces.size() == whole.size());
  for (std::size_t i = 0; i < whole.size(); ++i) {
    for (std::size_t k = 0; k < whole[i].bins.size(); ++k) {
      CHECK(pieces[i].bins[k].w == whole[i].bins[k].w);
      CHECK(pieces[i].bins[k].z == whole[i].bins[k].z);
    }
  }
}

TEST_CASE("AmbiX input is permuted to W, X, Y, Z") {
  const AudioBuffer in = random_buffer(4, 2000, 13);
  AudioBuffer ambix = in;
  ambix.channels = {in.channels[0], in.channels[2], in.channels[3], in.channels[1]};
  FrontendConfig cfg;
  cfg.channel_order = ChannelOrder::ambix;
  const auto a = stft(ambix, cfg);
  const auto b = stft(in, FrontendConfig{});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a[i].bins.size(); ++k) {
      CHECK(a[i].bins[k].x == b[i].bins[k].x);
      CHECK(a[i].bins[k].y == b[i].bins[k].y);
      CHECK(a[i].bins[k].z == b[i].bins[k].z);
    }
  }
}

TEST_CASE("frontend configuration is validated") {
  FrontendConfig cfg;
  cfg.f_hi = 13000.0;
  CHECK_THROWS_AS(cfg.validate(24000), ConfigError);
  cfg = {};
  cfg.overlap = 1.0;
  CHECK_THROWS_AS(cfg.validate(24000), ConfigError);
  cfg = {};
  cfg.frame_len = 10.0 / 24000.0;
  CHECK_THROWS_AS(cfg.validate(24000), ConfigError);
  CHECK_THROWS_AS(stft(AudioBuffer::zeros(24000, 3, 2000), FrontendConfig{}), ConfigError);
}

TEST_CASE("float WAV round trip preserves samples") {
  const auto dir = test::scratch_dir("frontend");
  const auto path = (dir / "rt.wav").string();
  AudioBuffer in = random_buffer(4, 3000, 14);
  write_wav(path, in);
  const AudioBuffer out = read_wav(path);
  CHECK(out.sample_rate == in.sample_rate);
  REQUIRE(out.channel_count() == 4);
  REQUIRE(out.frame_count() == 3000);
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t t = 0; t < 3000; ++t) CHECK(std::abs(out.channels[c][t] - in.channels[c][t]) <= 1e-7);
  }
}

TEST_CASE("PCM16 WAV files are decoded to floats") {
  const auto dir = test::scratch_dir("frontend");
  const auto path = (dir / "pcm16.wav").string();
  const std::vector<std::int16_t> samples{0, 16384, -32768, 32767, 100, -100};  // 3 frames x 2 channels
  {
    std::ofstream out(path, std::ios::binary);
    auto u32 = [&](std::uint32_t v) { out.write(reinterpret_cast<const char*>(&v), 4); };
    auto u16 = [&](std::uint16_t v) { out.write(reinterpret_cast<const char*>(&v), 2); };
    const std::uint32_t data = static_cast<std::uint32_t>(samples.size() * 2);
    out.write("RIFF", 4);
    u32(36 + data);
    out.write("WAVEfmt ", 8);
    u32(16);
    u16(1);
    u16(2);
    u32(16000);
    u32(16000 * 4);
    u16(4);
    u16(16);
    out.write("data", 4);
    u32(data);
    for (auto s : samples) out.write(reinterpret_cast<const char*>(&s), 2);
  }
  const AudioBuffer b = read_wav(path);
  CHECK(b.sample_rate == 16000);
  REQUIRE(b.channel_count() == 2);
  REQUIRE(b.frame_count() == 3);
  CHECK(b.channels[0][0] == 0.0);
  CHECK(b.channels[1][0] == doctest::Approx(0.5));
  CHECK(b.channels[0][1] == doctest::Approx(-1.0));
  CHECK(b.channels[1][1] == doctest::Approx(32767.0 / 32768.0));
  CHECK_THROWS_AS(read_wav((dir / "absent.wav").string()), IoError);
}
