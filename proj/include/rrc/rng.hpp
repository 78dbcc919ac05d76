#pragma once

#include <cstdint>
#include <vector>

namespace rrc {

// splitmix64: tiny, fully specified, identical streams on every platform.
// Std distributions are avoided on purpose — their output is
// implementation-defined and the suite promises reproducible case streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Independent substream derived from (seed, stream id).
    static Rng stream(std::uint64_t seed, std::uint64_t id) {
        Rng mixer(seed ^ (0x9e3779b97f4a7c15ULL * (id + 1)));
        mixer.next();
        return Rng(mixer.next());
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n >= 1.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(v.size()))];
    }

    // True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

// FNV-1a, used to derive per-check stream ids from check names.
inline std::uint64_t fnv1a(const char* s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 0x100000001b3ULL;
    return h;
}

}  // namespace rrc
