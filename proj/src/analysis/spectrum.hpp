#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace cfclock::analysis {

using complexd = std::complex<double>;

/// Complex heterodyne record s(t) = I(t) + iQ(t), uniformly sampled.
struct IQRecord {
    double sample_rate = 0.0; // Hz
    std::vector<complexd> samples;

    double dt() const { return 1.0 / sample_rate; }
    double duration() const { return static_cast<double>(samples.size()) / sample_rate; }
    void validate() const;
};

/// sum |s|^2 dt.
double record_energy(const IQRecord& rec);

enum class Window { rectangular, hamming, hann };

/// Two-sided averaged energy spectral density, drive at 0 Hz. Per record
/// esd(f_k) = |FFT(s)_k|^2 dt^2, so integrating esd over frequency equals
/// the record energy exactly (Parseval).
struct EsdResult {
    double sample_rate = 0.0;
    int n_averages = 0;
    std::vector<double> freq; // Hz, ascending, centered on 0
    std::vector<double> esd;

    double df() const { return freq.size() > 1 ? freq[1] - freq[0] : 0.0; }
    double integral() const;
    /// index of the largest esd value inside [f_lo, f_hi]
    std::size_t peak_index(double f_lo, double f_hi) const;
};

EsdResult compute_esd(std::span<const IQRecord> records, Window window = Window::rectangular);

/// Split one long record into equal-length segments for averaging.
std::vector<IQRecord> segment_record(const IQRecord& rec, std::size_t samples_per_segment,
                                     std::size_t max_segments);

// IQ record file formats: binary (magic "CFCIQ001", u64 count, f64 rate,
// interleaved f64 I,Q; little-endian) and CSV (t, I, Q).
void write_iq_binary(const std::string& path, const IQRecord& rec);
IQRecord read_iq_binary(const std::string& path);
void write_iq_csv(const std::string& path, const IQRecord& rec);

} // namespace cfclock::analysis
