#include "qint/corpus.hpp"

#include <cmath>

namespace qint {

std::vector<CorpusEntry> holomorphic_corpus() {
    return {
        {"const", [](const Quat&) { return kCorpusConst; }},
        {"az+c", [](const Quat& z) { return kCorpusA * z + kCorpusC; }},
        {"azb+c", [](const Quat& z) { return kCorpusA * z * kCorpusB + kCorpusC; }},
        {"t^2", [](const Quat& z) { const cplx t = tchan(z); return embed(t * t); }},
        {"u-conj-t-j", [](const Quat& z) { return embed(uchan(z) * std::conj(tchan(z))) * QJ; }},
    };
}

std::vector<CorpusEntry> contrast_corpus() {
    return {
        {"conj", [](const Quat& z) { return z.conj(); }},
        {"azj+c", [](const Quat& z) { return kCorpusA * z * QJ + kCorpusC; }},
    };
}

std::vector<Quat> interior_points(std::uint64_t seed, int count, double rmax) {
    Rng rng(seed);
    std::vector<Quat> pts;
    pts.reserve(count);
    while (static_cast<int>(pts.size()) < count) {
        Quat p{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        const double n = p.norm();
        if (n < 1e-12) continue;
        const double r = rmax * std::sqrt(rng.uniform53());
        pts.push_back(p * (r / n));
    }
    return pts;
}

}  // namespace qint
