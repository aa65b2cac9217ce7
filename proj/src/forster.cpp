#include "rydsim/forster.hpp"

#include <cmath>

#include "rydsim/angular.hpp"
#include "rydsim/io.hpp"

namespace rydsim::forster {

namespace {

RydbergLevel parse_level(const io::json& j) {
    RydbergLevel lv;
    lv.n = j.at("n").get<int>();
    lv.l = j.at("l").get<int>();
    lv.two_j = j.value("two_j", 2 * lv.l + 1);
    if (!lv.valid())
        throw CatalogMismatch("invalid level in catalog: n=" +
                              std::to_string(lv.n));
    return lv;
}

std::string level_label(const RydbergLevel& lv, int two_m) {
    static const char* ells = "SPDF";
    return std::to_string(lv.n) + ells[lv.l] + std::to_string(lv.two_j) +
           "/2,m=" + std::to_string(two_m) + "/2";
}

} // namespace

double Catalog::lifetime_us(const RydbergLevel& level) const {
    for (const auto& lt : lifetimes)
        if (lt.level.n == level.n && lt.level.l == level.l) return lt.tau_us;
    throw CatalogMismatch("no lifetime for n=" + std::to_string(level.n) +
                          " l=" + std::to_string(level.l));
}

Catalog build_catalog(const std::string& path, double coupling_floor_mhz_um3) {
    const std::string text = io::read_file(path);
    io::json j;
    try {
        j = io::json::parse(text);
    } catch (const std::exception& e) {
        throw CatalogMismatch(std::string("catalog parse error: ") + e.what());
    }

    Catalog cat;
    cat.fingerprint = io::fnv1a64(text);
    cat.source_path = path;

    for (const auto& p : j.at("polarizabilities")) {
        stark::Polarizability pol;
        pol.level = parse_level(p.at("state"));
        pol.two_abs_mj = p.at("two_abs_mj").get<int>();
        pol.alpha_mhz_per_v2cm2 = p.at("alpha_mhz_per_v2cm2").get<double>();
        cat.polarizabilities.add(pol);
    }

    for (const auto& c : j.at("channels")) {
        ChannelSpec ch;
        ch.index = c.at("index").get<int>();
        ch.a = parse_level(c.at("initial").at("a"));
        ch.two_ma = c.at("initial").at("a").at("two_m").get<int>();
        ch.b = parse_level(c.at("initial").at("b"));
        ch.two_mb = c.at("initial").at("b").at("two_m").get<int>();
        ch.to_a = parse_level(c.at("final").at("a"));
        ch.two_ma_f = c.at("final").at("a").at("two_m").get<int>();
        ch.to_b = parse_level(c.at("final").at("b"));
        ch.two_mb_f = c.at("final").at("b").at("two_m").get<int>();
        ch.delta0_mhz = c.at("delta0_mhz").get<double>();
        ch.c3_mhz_um3 = c.at("c3_mhz_um3").get<double>();
        ch.q = c.at("q").get<double>();

        if (ch.two_ma + ch.two_mb != ch.two_ma_f + ch.two_mb_f)
            throw CatalogMismatch("channel " + std::to_string(ch.index) +
                                  ": projection sum not conserved");
        const double q_recomputed = angular::angular_factor(
            ch.a, ch.two_ma, ch.b, ch.two_mb, ch.to_a, ch.two_ma_f, ch.to_b,
            ch.two_mb_f);
        if (std::abs(q_recomputed - ch.q) > 1e-12)
            throw CatalogMismatch(
                "channel " + std::to_string(ch.index) +
                ": stored angular factor " + std::to_string(ch.q) +
                " does not match recomputed " + std::to_string(q_recomputed));

        if (std::abs(ch.c3_mhz_um3 * ch.q) < coupling_floor_mhz_um3)
            cat.rejected.push_back(ch);
        else
            cat.channels.push_back(ch);
    }

    for (const auto& lt : j.at("lifetimes_us")) {
        Lifetime l;
        l.level.n = lt.at("level").at("n").get<int>();
        l.level.l = lt.at("level").at("l").get<int>();
        l.level.two_j = 2 * l.level.l + 1;
        l.tau_us = lt.at("tau_us").get<double>();
        cat.lifetimes.push_back(l);
    }
    return cat;
}

double coupling(const ChannelSpec& ch, double r_um) {
    if (!(r_um > 0)) throw OutOfRange("separation must be positive");
    return mhz_to_ang(ch.c3_mhz_um3 * ch.q / (r_um * r_um * r_um));
}

CollectiveBasis collective_basis(const Catalog& cat) {
    CollectiveBasis b;
    if (cat.channels.empty()) return b;
    const auto& c0 = cat.channels.front();
    b.labels.push_back("|" + level_label(c0.a, c0.two_ma) + "; " +
                       level_label(c0.b, c0.two_mb) + ">");
    for (const auto& ch : cat.channels)
        b.labels.push_back("|" + level_label(ch.to_a, ch.two_ma_f) + "; " +
                           level_label(ch.to_b, ch.two_mb_f) + ">");
    return b;
}

PairHamiltonian::PairHamiltonian(const Catalog& cat, double r_um)
    : channels_(cat.channels), r_um_(r_um) {
    if (channels_.empty())
        throw CatalogMismatch("catalog holds no coupled channels");
    couplings_.reserve(channels_.size());
    delta0_ang_.reserve(channels_.size());
    alpha_pair_.reserve(channels_.size());
    for (const auto& ch : channels_) {
        couplings_.push_back(coupling(ch, r_um));
        delta0_ang_.push_back(mhz_to_ang(ch.delta0_mhz));
        alpha_pair_.push_back(stark::pair_alpha(ch, cat.polarizabilities));
    }
}

void PairHamiltonian::at_field(double e_field_v_cm, cplx* h) const {
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d * d; ++i) h[i] = cplx(0.0, 0.0);
    const double e2 = e_field_v_cm * e_field_v_cm;
    for (std::size_t k = 0; k < channels_.size(); ++k) {
        const double det =
            delta0_ang_[k] + mhz_to_ang(-0.5 * alpha_pair_[k] * e2);
        h[(k + 1) * d + (k + 1)] = det;
        h[0 * d + (k + 1)] = couplings_[k];
        h[(k + 1) * d + 0] = couplings_[k];
    }
}

} // namespace rydsim::forster
