// Copyright 2026 The cultsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cultsim/analysis.h"

#include <boost/math/distributions/beta.hpp>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cultsim/densesim.h"
#include "json.hpp"

namespace cultsim {

Interval clopper_pearson(size_t k, size_t n, double level) {
    if (n == 0 || k > n) {
        throw std::invalid_argument("clopper_pearson needs 0 <= k <= n and n > 0");
    }
    if (!(level > 0 && level < 1)) {
        throw std::invalid_argument("confidence level must lie in (0, 1)");
    }
    double alpha = 1 - level;
    Interval out;
    if (k == 0) {
        out.lo = 0;
    } else {
        out.lo = boost::math::quantile(boost::math::beta_distribution<double>((double)k, (double)(n - k + 1)), alpha / 2);
    }
    if (k == n) {
        out.hi = 1;
    } else {
        out.hi = boost::math::quantile(boost::math::beta_distribution<double>((double)(k + 1), (double)(n - k)), 1 - alpha / 2);
    }
    return out;
}

Estimate binomial_estimate(size_t hits, size_t total, double level) {
    Estimate e;
    e.hits = hits;
    e.total = total;
    e.value = total ? (double)hits / (double)total : 0;
    e.ci = clopper_pearson(hits, total, level);
    return e;
}

ShotRecord ShotRecord::from_result(const ShotResult &r) {
    ShotRecord s;
    s.measurements = r.record;
    s.detectors = r.detector_events;
    s.observables = r.observable_flips;
    return s;
}

std::string format_shot(const ShotRecord &s) {
    static const char kHex[] = "0123456789abcdef";
    std::string out;
    for (size_t j = 0; j < s.measurements.size(); j += 4) {
        int v = 0;
        for (size_t b = 0; b < 4 && j + b < s.measurements.size(); b++) {
            v |= (s.measurements[j + b] & 1) << b;
        }
        out += kHex[v];
    }
    out += '\t';
    bool first = true;
    for (size_t d = 0; d < s.detectors.size(); d++) {
        if (s.detectors[d]) {
            out += (first ? "" : ",") + std::to_string(d);
            first = false;
        }
    }
    out += '\t';
    for (uint8_t o : s.observables) {
        out += o ? '1' : '0';
    }
    return out;
}

ShotRecord parse_shot(std::string_view line, size_t num_measurements, size_t num_detectors) {
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) {
        throw std::invalid_argument("shot line needs three tab-separated fields");
    }
    ShotRecord s;
    std::string_view hex = line.substr(0, t1), dets = line.substr(t1 + 1, t2 - t1 - 1), obs = line.substr(t2 + 1);
    if (hex.size() != (num_measurements + 3) / 4) {
        throw std::invalid_argument("measurement field has the wrong length");
    }
    s.measurements.assign(num_measurements, 0);
    for (size_t j = 0; j < hex.size(); j++) {
        char c = hex[j];
        int v = c >= '0' && c <= '9' ? c - '0' : c >= 'a' && c <= 'f' ? c - 'a' + 10 : -1;
        if (v < 0) {
            throw std::invalid_argument("bad hex digit in shot line");
        }
        for (size_t b = 0; b < 4; b++) {
            if (4 * j + b < num_measurements) {
                s.measurements[4 * j + b] = (v >> b) & 1;
            } else if ((v >> b) & 1) {
                throw std::invalid_argument("measurement bits past the record length");
            }
        }
    }
    s.detectors.assign(num_detectors, 0);
    size_t pos = 0;
    while (pos < dets.size()) {
        size_t comma = dets.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = dets.size();
        }
        size_t d = std::stoul(std::string(dets.substr(pos, comma - pos)));
        if (d >= num_detectors) {
            throw std::invalid_argument("detector index out of range in shot line");
        }
        s.detectors[d] = 1;
        pos = comma + 1;
    }
    for (char c : obs) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bad observable bit in shot line");
        }
        s.observables.push_back(c == '1');
    }
    return s;
}

std::string PostselectPolicy::to_json() const {
    nlohmann::json j;
    j["all_detectors"] = all_detectors;
    j["detectors"] = detectors;
    j["record_conditions"] = nlohmann::json::array();
    for (auto [r, v] : record_conditions) {
        j["record_conditions"].push_back({r, v});
    }
    return j.dump();
}

PostselectPolicy PostselectPolicy::from_json(std::string_view text) {
    try {
        auto j = nlohmann::json::parse(text);
        PostselectPolicy p;
        p.all_detectors = j.value("all_detectors", true);
        p.detectors = j.value("detectors", std::vector<size_t>{});
        for (const auto &c : j.value("record_conditions", nlohmann::json::array())) {
            p.record_conditions.emplace_back(c.at(0).get<size_t>(), c.at(1).get<uint8_t>());
        }
        return p;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("bad post-selection policy: ") + e.what());
    }
}

Postselection postselect(std::vector<ShotRecord> &shots, const PostselectPolicy &policy, double level) {
    if (shots.empty()) {
        throw std::invalid_argument("postselect needs at least one shot");
    }
    Postselection out;
    for (size_t i = 0; i < shots.size(); i++) {
        auto &s = shots[i];
        bool keep = true;
        if (policy.all_detectors) {
            for (uint8_t d : s.detectors) {
                keep &= d == 0;
            }
        } else {
            for (size_t d : policy.detectors) {
                if (d >= s.detectors.size()) {
                    throw std::invalid_argument("policy names a detector the shot does not have");
                }
                keep &= s.detectors[d] == 0;
            }
        }
        for (auto [r, v] : policy.record_conditions) {
            if (r >= s.measurements.size()) {
                throw std::invalid_argument("policy names a measurement the shot does not have");
            }
            keep &= s.measurements[r] == v;
        }
        s.kept = keep;
        if (keep) {
            out.kept.push_back(i);
        }
    }
    out.retention = binomial_estimate(out.kept.size(), shots.size(), level);
    return out;
}

Estimate logical_error(const std::vector<ShotRecord> &shots, size_t observable, double level) {
    size_t kept = 0, flips = 0;
    for (const auto &s : shots) {
        if (!s.kept) {
            continue;
        }
        if (observable >= s.observables.size()) {
            throw std::invalid_argument("observable index out of range");
        }
        kept++;
        flips += s.observables[observable];
    }
    if (kept == 0) {
        throw std::invalid_argument("logical_error needs at least one kept shot");
    }
    return binomial_estimate(flips, kept, level);
}

TransversalSpec TransversalSpec::color_code() {
    TransversalSpec s;
    s.checks = color_code_plaquettes();
    s.logical = {0, 1, 2, 3, 4, 5, 6};
    return s;
}

double TomographyResult::norm2() const {
    return bloch[0] * bloch[0] + bloch[1] * bloch[1] + bloch[2] * bloch[2];
}

TomographyResult bloch_from_transversal(const std::array<std::vector<std::vector<uint8_t>>, 3> &shots,
                                        const TransversalSpec &spec) {
    TomographyResult out;
    for (int a = 0; a < 3; a++) {
        size_t kept = 0, minus = 0;
        for (const auto &bits : shots[a]) {
            auto parity = [&](const std::vector<size_t> &qs) {
                uint8_t v = 0;
                for (size_t q : qs) {
                    if (q >= bits.size()) {
                        throw std::invalid_argument("transversal spec refers past the shot length");
                    }
                    v ^= bits[q];
                }
                return v;
            };
            bool ok = true;
            for (const auto &c : spec.checks) {
                ok &= parity(c) == 0;
            }
            if (!ok) {
                continue;
            }
            kept++;
            minus += parity(spec.logical);
        }
        if (kept == 0) {
            throw std::invalid_argument("tomography axis kept no shots");
        }
        double q = (double)minus / (double)kept;
        out.shots[a] = shots[a].size();
        out.kept[a] = kept;
        out.keep[a] = (double)kept / (double)shots[a].size();
        out.bloch[a] = spec.signs[a] * (1 - 2 * q);
        out.sigma[a] = 2 * std::sqrt(q * (1 - q) / (double)kept);
    }
    return out;
}

TomographyResult sample_tilted_tomography(size_t shots_per_axis, uint64_t seed, double angle_deg) {
    double a = angle_deg * std::numbers::pi / 180;
    DenseState st = tilted_state(rz(a) * rx(a) * rz(a));
    std::mt19937_64 rng(seed);
    std::array<std::vector<std::vector<uint8_t>>, 3> shots;
    const char axes[3] = {'X', 'Y', 'Z'};
    for (int k = 0; k < 3; k++) {
        auto probs = basis_outcome_probabilities(st, axes[k]);
        std::discrete_distribution<size_t> pick(probs.begin(), probs.end());
        for (size_t s = 0; s < shots_per_axis; s++) {
            size_t y = pick(rng);
            std::vector<uint8_t> bits(7);
            for (size_t j = 0; j < 7; j++) {
                bits[j] = (y >> j) & 1;
            }
            shots[k].push_back(std::move(bits));
        }
    }
    return bloch_from_transversal(shots, TransversalSpec::color_code());
}

namespace {

struct LineFit {
    double slope = 0, intercept = 0, slope_sigma = 0;
};

// Weighted least squares; sigma from the weights when given, from the residuals otherwise.
LineFit fit_line(const std::vector<double> &x, const std::vector<double> &y, const std::vector<double> &sy) {
    bool weighted = !sy.empty();
    double sw = 0, sx = 0, syy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        double w = weighted ? 1 / (sy[i] * sy[i]) : 1;
        sw += w;
        sx += w * x[i];
        syy += w * y[i];
        sxx += w * x[i] * x[i];
        sxy += w * x[i] * y[i];
    }
    double det = sw * sxx - sx * sx;
    if (!(det > 0)) {
        throw std::invalid_argument("degenerate fit: need at least two distinct x values");
    }
    LineFit f;
    f.slope = (sw * sxy - sx * syy) / det;
    f.intercept = (sxx * syy - sx * sxy) / det;
    if (weighted) {
        f.slope_sigma = std::sqrt(sw / det);
    } else if (x.size() > 2) {
        double rss = 0;
        for (size_t i = 0; i < x.size(); i++) {
            double r = y[i] - f.intercept - f.slope * x[i];
            rss += r * r;
        }
        f.slope_sigma = std::sqrt(rss / (double)(x.size() - 2) * sw / det);
    }
    return f;
}

bool has_error_bars(const std::vector<PowerLawPoint> &points) {
    for (const auto &p : points) {
        if (p.lo == 0 && p.hi == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

PowerLawFit fit_power_law(const std::vector<PowerLawPoint> &points) {
    if (points.size() < 3) {
        throw std::invalid_argument("power-law fit needs at least three points");
    }
    bool weighted = has_error_bars(points);
    std::vector<double> x, y, sy;
    for (const auto &p : points) {
        if (!(p.x > 0 && p.y > 0)) {
            throw std::invalid_argument("power-law fit needs positive values");
        }
        x.push_back(std::log(p.x));
        y.push_back(std::log(p.y));
        if (weighted) {
            // Half the log width of the interval; a zero lower bound falls back to the upper side.
            double hi = std::log(std::max(p.hi, p.y)), lo = p.lo > 0 ? std::log(p.lo) : 2 * y.back() - hi;
            sy.push_back(std::max((hi - lo) / 2, 1e-12));
        }
    }
    auto f = fit_line(x, y, sy);
    return PowerLawFit{f.slope, f.slope_sigma, std::exp(f.intercept)};
}

LerFit fit_ler_per_cycle(const std::vector<PowerLawPoint> &points) {
    if (points.size() < 2) {
        throw std::invalid_argument("per-cycle fit needs at least two cycle counts");
    }
    bool weighted = has_error_bars(points);
    std::vector<double> x, y, sy;
    for (const auto &p : points) {
        if (!(p.y >= 0 && p.y < 0.5)) {
            throw std::invalid_argument("logical errors must lie in [0, 1/2) for the per-cycle fit");
        }
        x.push_back(p.x);
        y.push_back(std::log(1 - 2 * p.y));
        if (weighted) {
            double hi = std::min(p.hi, 0.4999999);
            sy.push_back(std::max((std::log(1 - 2 * p.lo) - std::log(1 - 2 * hi)) / 2, 1e-12));
        }
    }
    auto f = fit_line(x, y, sy);
    LerFit out;
    out.ler = (1 - std::exp(f.slope)) / 2;
    out.ci.lo = (1 - std::exp(f.slope + f.slope_sigma)) / 2;
    out.ci.hi = (1 - std::exp(f.slope - f.slope_sigma)) / 2;
    out.amplitude = std::exp(f.intercept);
    return out;
}

std::vector<DetectionFraction> detection_fractions(const std::vector<ShotRecord> &shots, const Circuit &c,
                                                   double level) {
    auto dets = c.detectors();
    std::vector<size_t> fired(dets.size(), 0);
    for (const auto &s : shots) {
        if (s.detectors.size() > dets.size()) {
            throw std::invalid_argument("shot has more detectors than the circuit");
        }
        for (size_t d = 0; d < s.detectors.size(); d++) {
            fired[d] += s.detectors[d];
        }
    }
    std::vector<DetectionFraction> out;
    for (size_t d = 0; d < dets.size(); d++) {
        DetectionFraction f;
        f.detector = d;
        f.time = dets[d].coords.empty() ? 0 : dets[d].coords.back();
        if (!shots.empty()) {
            f.rate = binomial_estimate(fired[d], shots.size(), level);
        }
        out.push_back(f);
    }
    return out;
}

std::map<double, double> mean_by_time(const std::vector<DetectionFraction> &fractions) {
    std::map<double, std::pair<double, size_t>> acc;
    for (const auto &f : fractions) {
        acc[f.time].first += f.rate.value;
        acc[f.time].second++;
    }
    std::map<double, double> out;
    for (auto &[t, v] : acc) {
        out[t] = v.first / (double)v.second;
    }
    return out;
}

}  // namespace cultsim
