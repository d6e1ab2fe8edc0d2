#include "photon_router/trajectory.hpp"

#include <cmath>
#include <complex>

namespace pr::trajectory {

using cd = std::complex<double>;
using Eigen::MatrixXcd;

namespace {

const cd I(0.0, 1.0);

struct Local
{
    int dim;
    std::vector<int> excitation;    // per local level
};

Local local_space(Part p, int photons)
{
    switch (p) {
    case Part::Feeder: {
        Local l{photons + 1, {}};
        for (int n = 0; n <= photons; ++n) l.excitation.push_back(n);
        return l;
    }
    case Part::TwoLevelAtom:
    case Part::SingleSidedAtom:
        return {2, {0, 1}};
    case Part::SourceAtom:
        return {2, {0, 2}};     // the excited source holds a photon pair
    case Part::LambdaAtom:
        return {3, {0, 1, 0}};  // g1, e, g2
    }
    return {1, {0}};
}

// Embeds a local operator, given as a dense matrix on one part, in the chain basis.
MatrixXcd embed(const ChainSystem& c, int part, const MatrixXcd& local)
{
    const int dim = c.dimension();
    MatrixXcd out = MatrixXcd::Zero(dim, dim);
    for (int j = 0; j < dim; ++j) {
        auto occ = c.basis[j];
        const int from = occ[part];
        for (int to = 0; to < local.rows(); ++to) {
            const cd v = local(to, from);
            if (v == cd(0)) continue;
            occ[part] = to;
            const int i = c.index(occ);
            if (i >= 0) out(i, j) += v;
        }
    }
    return out;
}

MatrixXcd lowering(int dim)
{
    MatrixXcd a = MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

MatrixXcd transition(int dim, int to, int from)
{
    MatrixXcd s = MatrixXcd::Zero(dim, dim);
    s(to, from) = 1.0;
    return s;
}

} // namespace

int ChainSystem::index(const std::vector<int>& occupation) const
{
    for (int i = 0; i < dimension(); ++i) {
        if (basis[i] == occupation) return i;
    }
    return -1;
}

std::string ChainSystem::label(int i) const
{
    std::string s = "|";
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const int v = basis[i][k];
        switch (parts[k]) {
        case Part::Feeder: s += std::to_string(v); break;
        case Part::TwoLevelAtom:
        case Part::SingleSidedAtom:
        case Part::SourceAtom: s += v ? "e" : "g"; break;
        case Part::LambdaAtom: s += v == 0 ? "g1" : v == 1 ? "e" : "g2"; break;
        }
    }
    return s + ">";
}

int ChainSystem::excitation(int i) const
{
    int e = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        e += local_space(parts[k], max_excitation).excitation[basis[i][k]];
    }
    return e;
}

double ChainSystem::max_rate() const
{
    return H.cwiseAbs().rowwise().sum().maxCoeff();
}

ChainSystem build_chain(const ScenarioConfig& config)
{
    const ScenarioConfig cfg = validate(config);
    const RateSet& r = cfg.rates;
    const int photons = cfg.photon_number;

    ChainSystem c;
    c.max_excitation = photons;
    switch (cfg.scenario) {
    case Scenario::TwoLevelRouter: c.parts = {Part::Feeder, Part::TwoLevelAtom}; break;
    case Scenario::EntangledSourceRouter: c.parts = {Part::SourceAtom, Part::Feeder, Part::TwoLevelAtom}; break;
    case Scenario::TwoStageCascade: c.parts = {Part::Feeder, Part::SingleSidedAtom, Part::TwoLevelAtom}; break;
    case Scenario::SingleSidedBunching: c.parts = {Part::Feeder, Part::SingleSidedAtom}; break;
    case Scenario::LambdaRouter: c.parts = {Part::Feeder, Part::LambdaAtom}; break;
    }
    if (cfg.scenario == Scenario::EntangledSourceRouter && photons != 2) {
        throw config_error("the entangled source emits exactly two photons; photon_number must be 2");
    }

    std::vector<Local> locals;
    for (Part p : c.parts) locals.push_back(local_space(p, photons));
    std::vector<int> occ(c.parts.size(), 0);
    // lexicographic product enumeration, truncated by excitation number
    for (;;) {
        int e = 0;
        for (std::size_t k = 0; k < occ.size(); ++k) e += locals[k].excitation[occ[k]];
        if (e <= photons) c.basis.push_back(occ);
        int k = static_cast<int>(occ.size()) - 1;
        while (k >= 0 && ++occ[k] == locals[k].dim) occ[k--] = 0;
        if (k < 0) break;
    }

    const int n = c.dimension();
    // forward operators in chain order, plus losses that are not passed on
    std::vector<MatrixXcd> forward;
    std::vector<MatrixXcd> losses;
    MatrixXcd reflected;
    MatrixXcd extra = MatrixXcd::Zero(n, n);
    int feeder = -1;
    for (std::size_t k = 0; k < c.parts.size(); ++k) {
        if (c.parts[k] == Part::Feeder) feeder = static_cast<int>(k);
    }
    const MatrixXcd a = embed(c, feeder, lowering(photons + 1));

    for (std::size_t k = 0; k < c.parts.size(); ++k) {
        const int part = static_cast<int>(k);
        switch (c.parts[k]) {
        case Part::Feeder:
            forward.push_back(std::sqrt(2 * r.kappa_s) * a);
            break;
        case Part::TwoLevelAtom: {
            const double g = cfg.scenario == Scenario::TwoStageCascade ? r.gamma_c2 : r.gamma_c;
            const MatrixXcd s = embed(c, part, lowering(2));
            forward.push_back(std::sqrt(2 * g) * s);
            reflected = std::sqrt(2 * g) * s;
            losses.push_back(reflected);
            break;
        }
        case Part::SingleSidedAtom:
            forward.push_back(std::sqrt(2 * r.gamma_c1) * embed(c, part, lowering(2)));
            break;
        case Part::SourceAtom: {
            // emits the pair into the feeder through its weak left mirror
            const MatrixXcd s = embed(c, part, lowering(2));
            const double kp = source_mirror_ratio * r.kappa_s;
            extra += -2.0 * I * std::sqrt(2 * kp * r.gamma_s) * a.adjoint() * a.adjoint() * s;
            losses.push_back(std::sqrt(4 * r.gamma_s) * s);
            break;
        }
        case Part::LambdaAtom:
            forward.push_back(std::sqrt(2 * r.gamma_cH) * embed(c, part, transition(3, 0, 1)));
            reflected = std::sqrt(2 * r.gamma_cV) * embed(c, part, transition(3, 2, 1));
            losses.push_back(reflected);
            break;
        }
    }

    c.H = extra;
    for (std::size_t j = 0; j < forward.size(); ++j) {
        c.H += -0.5 * I * forward[j].adjoint() * forward[j];
        for (std::size_t i = 0; i < j; ++i) c.H += -I * forward[j].adjoint() * forward[i];
    }
    for (const auto& L : losses) c.H += -0.5 * I * L.adjoint() * L;

    MatrixXcd t = MatrixXcd::Zero(n, n);
    for (const auto& f : forward) t += f;
    c.channels.push_back(t);
    c.channel_names.push_back(cfg.scenario == Scenario::LambdaRouter ? "H" : "t");
    if (reflected.size() > 0) {
        c.channels.push_back(reflected);
        c.channel_names.push_back(cfg.scenario == Scenario::LambdaRouter ? "V" : "r");
    }

    std::vector<int> start(c.parts.size(), 0);
    if (cfg.scenario == Scenario::EntangledSourceRouter) {
        start[0] = 1;
    } else {
        start[feeder] = photons;
    }
    c.initial = Eigen::VectorXcd::Zero(n);
    c.initial(c.index(start)) = 1.0;
    return c;
}

} // namespace pr::trajectory
