#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace tramp {

// Multichannel audio, one sample vector per channel.
struct AudioBuffer {
  int sample_rate = 0;
  std::vector<std::vector<double>> channels;

  std::size_t channel_count() const { return channels.size(); }
  std::size_t frame_count() const { return channels.empty() ? 0 : channels.front().size(); }

  // Throws ConfigError unless sample_rate > 0, channels >= 1, equal lengths.
  void validate() const;

  static AudioBuffer zeros(int sample_rate, std::size_t channels, std::size_t frames);
};

// Static real gain matrix mapping raw channels to the four FOA channels.
class EncodingMatrix {
 public:
  EncodingMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static EncodingMatrix identity(std::size_t n);
  // Plain text: "rows cols" then row-major reals.
  static EncodingMatrix load(const std::string& path);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

AudioBuffer encode_foa(const AudioBuffer& buffer, const EncodingMatrix& matrix);

enum class SampleFormat { pcm16, pcm24, pcm32, float32 };

struct WavInfo {
  int sample_rate = 0;
  int channels = 0;
  SampleFormat format = SampleFormat::float32;
  std::uint64_t frames = 0;
};

// Incremental RIFF/WAVE reader; holds only the current block in memory.
class WavReader {
 public:
  explicit WavReader(const std::string& path);

  const WavInfo& info() const { return info_; }

  // Reads up to max_frames frames, appending per channel into out (resized to
  // the channel count). Returns frames read; 0 at end of data.
  std::size_t read(std::size_t max_frames, std::vector<std::vector<double>>& out);

 private:
  std::string path_;
  std::ifstream in_;
  WavInfo info_;
  std::uint64_t remaining_ = 0;
  std::vector<char> raw_;
};

AudioBuffer read_wav(const std::string& path);

// Writes 32-bit float WAV.
void write_wav(const std::string& path, const AudioBuffer& buffer);

}  // namespace tramp
