#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace rfk {

// splitmix64 finalizer (Stafford mix13 constants).
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline uint64_t rotl64(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

// xoshiro256++ generator. One instance per Monte Carlo path; streams for
// distinct (seed, index, salt) triples are decorrelated by the splitmix64
// avalanche of the seeding chain below.
class Xoshiro256pp {
  public:
    Xoshiro256pp() : Xoshiro256pp(0, 0, 0) {}

    // Stream construction: the four state words are successive splitmix64
    // outputs of the chain started at
    //   master_seed ^ (0x632BE59BD9B4E019 * (path_index+1)) ^ (0xD1B54A32D192ED03 * salt).
    // This mix is fixed; re-running with the same triple reproduces the
    // stream bit for bit.
    Xoshiro256pp(uint64_t master_seed, uint64_t path_index, uint64_t salt) {
        uint64_t chain = master_seed ^ (0x632BE59BD9B4E019ULL * (path_index + 1)) ^
                         (0xD1B54A32D192ED03ULL * salt);
        for (auto& w : s_) w = splitmix64(chain);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    uint64_t next() {
        uint64_t result = rotl64(s_[0] + s_[3], 23) + s_[0];
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl64(s_[3], 45);
        return result;
    }

    // uniform in [0,1), 53-bit resolution
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    // uniform in (0,1]; safe as a log() argument
    double uniform_pos() { return double((next() >> 11) + 1) * 0x1.0p-53; }

    // uniform in (-1,1)
    double uniform_signed() { return double(int64_t(next())) * 0x1.0p-63; }

  private:
    uint64_t s_[4];
};

namespace detail {

// Ziggurat layer tables for the standard normal, 128 boxes of equal area v.
// Box 0 is the base strip (with tail beyond r), box 1 the topmost slab
// reaching density 1, boxes 2..127 interior slabs.
struct ZigguratTables {
    static constexpr int N = 128;
    static constexpr double r = 3.442619855899;       // rightmost layer edge
    static constexpr double v = 9.91256303526217e-3;  // per-box area
    double width[N];   // half-width of box i
    double inner[N];   // immediate-accept half-width
    double fbot[N];    // density at box bottom edge
    double ftop[N];    // density at box top edge

    ZigguratTables() {
        auto f = [](double x) { return std::exp(-0.5 * x * x); };
        double x[N];  // x[127] = r down to x[1]
        x[N - 1] = r;
        for (int i = N - 1; i >= 2; --i)
            x[i - 1] = std::sqrt(-2.0 * std::log(f(x[i]) + v / x[i]));
        // closure of the published (r, v) pair: top box area is also v
        if (std::abs(x[1] * (1.0 - f(x[1])) - v) > 1e-10)
            throw std::logic_error("ziggurat table closure failed");
        width[0] = v / f(r);
        inner[0] = r;
        fbot[0] = f(r);
        ftop[0] = f(r);  // unused for box 0
        for (int i = 1; i < N; ++i) {
            width[i] = x[i];
            inner[i] = (i == 1) ? 0.0 : x[i - 1];
            fbot[i] = f(x[i]);
            ftop[i] = (i == 1) ? 1.0 : f(x[i - 1]);
        }
    }
};

inline const ZigguratTables& ziggurat_tables() {
    static const ZigguratTables t;
    return t;
}

}  // namespace detail

// Standard normal draw via the ziggurat method.
inline double normal(Xoshiro256pp& rng) {
    const auto& zt = detail::ziggurat_tables();
    for (;;) {
        uint64_t bits = rng.next();
        int i = int(bits & 127);
        double u = double(int64_t(bits)) * 0x1.0p-63;
        double x = u * zt.width[i];
        if (std::fabs(x) < zt.inner[i]) return x;
        if (i == 0) {
            // tail beyond r: Marsaglia's exponential rejection
            double xx, yy;
            do {
                xx = -std::log(rng.uniform_pos()) / detail::ZigguratTables::r;
                yy = -std::log(rng.uniform_pos());
            } while (yy + yy < xx * xx);
            double t = detail::ZigguratTables::r + xx;
            return u > 0 ? t : -t;
        }
        double y = zt.fbot[i] + rng.uniform() * (zt.ftop[i] - zt.fbot[i]);
        if (y < std::exp(-0.5 * x * x)) return x;
    }
}

// Convenience handle binding a path's stream. Salt values distinguish the
// independent streams a single path index may need (exit sampling vs the
// first stage of a restart experiment, etc).
struct StreamSalt {
    static constexpr uint64_t exit_sampling = 0;
    static constexpr uint64_t restart_stage1 = 1;
    static constexpr uint64_t law_check = 2;
    static constexpr uint64_t generator_probe = 3;
};

class PathRng {
  public:
    PathRng(uint64_t master_seed, uint64_t path_index, uint64_t salt = StreamSalt::exit_sampling)
        : gen_(master_seed, path_index, salt) {}

    double normal() { return rfk::normal(gen_); }
    double uniform() { return gen_.uniform(); }
    double uniform_signed() { return gen_.uniform_signed(); }
    uint64_t next_u64() { return gen_.next(); }
    Xoshiro256pp& raw() { return gen_; }

  private:
    Xoshiro256pp gen_;
};

}  // namespace rfk
