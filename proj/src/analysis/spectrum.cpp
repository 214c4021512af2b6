#include "analysis/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

#include "common/constants.hpp"

namespace cfclock::analysis {

namespace {

std::mutex fftw_planner_mutex;

// |FFT|^2 of a complex series; FFTW planning is not thread-safe, execution is.
std::vector<double> power_fft(const std::vector<complexd>& in) {
    const auto n = in.size();
    std::vector<complexd> buf(in);
    std::vector<complexd> out(n);
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex);
        fftw_plan plan = fftw_plan_dft_1d(
            static_cast<int>(n), reinterpret_cast<fftw_complex*>(buf.data()),
            reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD, FFTW_ESTIMATE);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }
    std::vector<double> power(n);
    for (std::size_t k = 0; k < n; ++k) power[k] = std::norm(out[k]);
    return power;
}

std::vector<double> window_weights(Window w, std::size_t n) {
    std::vector<double> weights(n, 1.0);
    if (w == Window::rectangular) return weights;
    for (std::size_t k = 0; k < n; ++k) {
        const double c = std::cos(two_pi * static_cast<double>(k) / static_cast<double>(n - 1));
        weights[k] = w == Window::hamming ? 0.54 - 0.46 * c : 0.5 - 0.5 * c;
    }
    return weights;
}

} // namespace

void IQRecord::validate() const {
    if (!(sample_rate > 0.0)) {
        throw std::invalid_argument("IQRecord: sample_rate must be > 0");
    }
    if (samples.size() < 2) {
        throw std::invalid_argument("IQRecord: need at least 2 samples");
    }
}

double record_energy(const IQRecord& rec) {
    double acc = 0.0;
    for (const auto& s : rec.samples) acc += std::norm(s);
    return acc * rec.dt();
}

double EsdResult::integral() const {
    double acc = 0.0;
    for (double v : esd) acc += v;
    return acc * df();
}

std::size_t EsdResult::peak_index(double f_lo, double f_hi) const {
    std::size_t best = freq.size();
    double best_v = -1.0;
    for (std::size_t k = 0; k < freq.size(); ++k) {
        if (freq[k] < f_lo || freq[k] > f_hi) continue;
        if (esd[k] > best_v) {
            best_v = esd[k];
            best = k;
        }
    }
    if (best == freq.size()) {
        throw std::invalid_argument("EsdResult::peak_index: empty frequency window");
    }
    return best;
}

EsdResult compute_esd(std::span<const IQRecord> records, Window window) {
    if (records.empty()) {
        throw std::invalid_argument("compute_esd: no records");
    }
    const std::size_t n = records[0].samples.size();
    const double rate = records[0].sample_rate;
    for (const auto& r : records) {
        r.validate();
        if (r.samples.size() != n || r.sample_rate != rate) {
            throw std::invalid_argument("compute_esd: records must share length and rate");
        }
    }
    const auto weights = window_weights(window, n);
    const double dt = 1.0 / rate;

    std::vector<double> acc(n, 0.0);
    std::vector<complexd> buf(n);
    for (const auto& r : records) {
        for (std::size_t k = 0; k < n; ++k) buf[k] = r.samples[k] * weights[k];
        const auto p = power_fft(buf);
        for (std::size_t k = 0; k < n; ++k) acc[k] += p[k];
    }

    EsdResult out;
    out.sample_rate = rate;
    out.n_averages = static_cast<int>(records.size());
    out.freq.resize(n);
    out.esd.resize(n);
    const double df = rate / static_cast<double>(n);
    const std::size_t half = n / 2;
    // fftshift: bins [half, n) are negative frequencies
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = (k + half) % n;
        const double f = (static_cast<double>(k) - static_cast<double>(half)) * df;
        out.freq[k] = f;
        out.esd[k] = acc[src] * dt * dt / static_cast<double>(records.size());
    }
    return out;
}

std::vector<IQRecord> segment_record(const IQRecord& rec, std::size_t samples_per_segment,
                                     std::size_t max_segments) {
    rec.validate();
    if (samples_per_segment < 2) {
        throw std::invalid_argument("segment_record: segment too short");
    }
    std::vector<IQRecord> out;
    std::size_t offset = 0;
    while (offset + samples_per_segment <= rec.samples.size() && out.size() < max_segments) {
        IQRecord seg;
        seg.sample_rate = rec.sample_rate;
        seg.samples.assign(rec.samples.begin() + static_cast<std::ptrdiff_t>(offset),
                           rec.samples.begin() + static_cast<std::ptrdiff_t>(offset + samples_per_segment));
        out.push_back(std::move(seg));
        offset += samples_per_segment;
    }
    if (out.empty()) {
        throw std::invalid_argument("segment_record: record shorter than one segment");
    }
    return out;
}

namespace {
constexpr char kIqMagic[8] = {'C', 'F', 'C', 'I', 'Q', '0', '0', '1'};
}

void write_iq_binary(const std::string& path, const IQRecord& rec) {
    rec.validate();
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw std::runtime_error("write_iq_binary: cannot open " + path);
    }
    os.write(kIqMagic, sizeof(kIqMagic));
    const std::uint64_t count = rec.samples.size();
    os.write(reinterpret_cast<const char*>(&count), sizeof(count));
    os.write(reinterpret_cast<const char*>(&rec.sample_rate), sizeof(double));
    for (const auto& s : rec.samples) {
        const double iq[2] = {s.real(), s.imag()};
        os.write(reinterpret_cast<const char*>(iq), sizeof(iq));
    }
    if (!os) {
        throw std::runtime_error("write_iq_binary: write failed for " + path);
    }
}

IQRecord read_iq_binary(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw std::runtime_error("read_iq_binary: cannot open " + path);
    }
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kIqMagic, sizeof(magic)) != 0) {
        throw std::runtime_error("read_iq_binary: bad magic in " + path);
    }
    std::uint64_t count = 0;
    IQRecord rec;
    is.read(reinterpret_cast<char*>(&count), sizeof(count));
    is.read(reinterpret_cast<char*>(&rec.sample_rate), sizeof(double));
    rec.samples.resize(count);
    for (auto& s : rec.samples) {
        double iq[2];
        is.read(reinterpret_cast<char*>(iq), sizeof(iq));
        s = {iq[0], iq[1]};
    }
    if (!is) {
        throw std::runtime_error("read_iq_binary: truncated file " + path);
    }
    rec.validate();
    return rec;
}

void write_iq_csv(const std::string& path, const IQRecord& rec) {
    rec.validate();
    std::ofstream os(path);
    if (!os) {
        throw std::runtime_error("write_iq_csv: cannot open " + path);
    }
    os << "t,I,Q\n";
    os.precision(17);
    for (std::size_t k = 0; k < rec.samples.size(); ++k) {
        os << static_cast<double>(k) * rec.dt() << ',' << rec.samples[k].real() << ','
           << rec.samples[k].imag() << '\n';
    }
}

} // namespace cfclock::analysis
