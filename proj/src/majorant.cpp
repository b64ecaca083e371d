#include "apg/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "apg/arith.hpp"

namespace apg::majorant {

namespace {

constexpr int kOrder = 32;
const quad kEps = ldexpq(quad(1), -113);

const char* const kTable2[23] = {
    "-10417203",
    "1056404889",
    "-65191418930",
    "2306235683461",
    "-50953892956052",
    "745294415104297",
    "-7554469767270438",
    "55069155554895360",
    "-297487524612176257",
    "1219731091815491142",
    "-3866974934911032963",
    "9612711864719121022",
    "-18920268046344982450",
    "29659178484686316889",
    "-37103060687919097856",
    "36963001195180424340",
    "-29124459758424138052",
    "17917680016161661642",
    "-8424311293805783518",
    "2923218093750242944",
    "-705518033170496127",
    "105765338120745449",
    "-7417073631321810",
};

struct Cx {
    quad re = 0, im = 0;
};
Cx mul(Cx a, Cx b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx inv(Cx a) {
    quad d = a.re * a.re + a.im * a.im;
    return {a.re / d, -a.im / d};
}
quad cabs(Cx a) { return sqrtq(a.re * a.re + a.im * a.im); }

quad c_of(const Constants& c, int j) { return 2 * c.s[j] - 1; }

struct Taylor {
    quad coef[kOrder + 1];
    quad remainder;  // bound on the truncation error plus rounding over |h| <= r
};

// F(gm + h) = sum_j a_j * 2 Im[1/(z_j + h)], z_j = gm - i c_j / 2.
Taylor taylor_F(const Constants& c, quad gm, quad r) {
    Taylor t{};
    quad rem = 0;
    for (int j = 0; j < c.size(); ++j) {
        quad aj = c.a(j);
        Cx w = inv({gm, -c_of(c, j) / 2});
        quad aw = cabs(w);
        Cx pw = w;
        for (int k = 0; k <= kOrder; ++k) {
            quad term = 2 * aj * pw.im;
            t.coef[k] += (k % 2 ? -term : term);
            pw = mul(pw, w);
        }
        quad ratio = r * aw;
        if (ratio >= 1) return {{}, std::numeric_limits<double>::infinity()};
        rem += 2 * fabsq(aj) * aw * powq(ratio, kOrder + 1) / (1 - ratio);
        rem += 2 * fabsq(aj) * aw * 64 * kEps * (kOrder + 1) / (1 - ratio);
    }
    t.remainder = rem;
    return t;
}

// g(gm + h) as a truncated power series with a Cauchy tail bound.
Taylor taylor_g(quad gm, quad r) {
    Taylor t{};
    quad sq[3] = {gm * gm, 2 * gm, 1};  // gamma^2
    quad p1[3] = {quad(0.25) + sq[0], sq[1], 1};
    quad p2[3] = {quad(2.25) + sq[0], sq[1], 1};
    quad D[5] = {};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) D[i + k] += p1[i] * p2[k];
    quad y[kOrder + 1] = {};
    y[0] = 1 / sqrtq(D[0]);
    for (int n = 1; n <= kOrder; ++n) {
        quad acc = 0;
        for (int i = 1; i <= std::min(4, n); ++i) acc += D[i] * quad(2 * n - i) * y[n - i];
        y[n] = -acc / (2 * quad(n) * D[0]);
    }
    for (int n = 0; n <= kOrder; ++n) {
        quad v = 0;
        for (int i = 0; i < 3 && i <= n; ++i) v += sq[i] * y[n - i];
        t.coef[n] = v;
    }
    quad R1 = sqrtq(gm * gm + quad(0.25));
    quad R3 = sqrtq(gm * gm + quad(2.25));
    quad rho = quad(0.75) * R1;
    quad M = (fabsq(gm) + rho) * (fabsq(gm) + rho) / ((R1 - rho) * (R3 - rho));
    quad ratio = r / rho;
    if (ratio >= 1) return {{}, std::numeric_limits<double>::infinity()};
    t.remainder = M * powq(ratio, kOrder + 1) / (1 - ratio) + M * 1e-28;
    return t;
}

// Lower bound of sum_k d_k h^k on [-r, r].
quad poly_lower_bound(const quad* d, quad r) {
    auto q2 = [&](quad h) { return d[0] + d[1] * h + d[2] * h * h; };
    quad lb = std::min(q2(-r), q2(r));
    if (d[2] > 0) {
        quad v = -d[1] / (2 * d[2]);
        if (fabsq(v) <= r) lb = std::min(lb, q2(v));
    }
    quad rk = r * r;
    for (int k = 3; k <= kOrder; ++k) {
        rk *= r;
        lb -= fabsq(d[k]) * rk;
    }
    return lb;
}

struct Cell {
    double a, b;
    bool with_g;
};

struct CellResult {
    double lb;
    bool ok;
};

CellResult eval_cell(const Constants& c, const Cell& cell) {
    quad gm = (quad(cell.a) + quad(cell.b)) / 2;
    quad r = (quad(cell.b) - quad(cell.a)) / 2;
    Taylor tf = taylor_F(c, gm, r);
    quad d[kOrder + 1];
    quad rem = tf.remainder;
    for (int k = 0; k <= kOrder; ++k) d[k] = tf.coef[k];
    if (cell.with_g) {
        Taylor tg = taylor_g(gm, r);
        for (int k = 0; k <= kOrder; ++k) d[k] -= tg.coef[k];
        rem += tg.remainder;
    }
    if (!(rem < 1)) return {-1e300, false};
    quad lb = poly_lower_bound(d, r) - rem;
    return {double(lb), lb >= quad(-1e-9)};
}

// Half the cells split [0, 5] evenly, the rest split [5, gamma_max] geometrically.
std::vector<Cell> initial_cells(double gamma_max, int sample_grid) {
    std::vector<Cell> cells;
    int n_small = std::max(1, sample_grid / 2);
    int n_large = std::max(1, sample_grid - n_small);
    for (int i = 0; i < n_small; ++i) cells.push_back({5.0 * i / n_small, 5.0 * (i + 1) / n_small, true});
    double ratio = std::pow(gamma_max / 5, 1.0 / n_large);
    double a = 5;
    for (int i = 0; i < n_large; ++i) {
        double b = i + 1 == n_large ? gamma_max : a * ratio;
        cells.push_back({a, b, false});
        a = b;
    }
    return cells;
}

struct Walk {
    long cells = 0;
    double worst = std::numeric_limits<double>::infinity();
    double worst_gamma = 0;
    bool failed = false;
    bool exhausted = false;
};

// Depth-first refinement of one starting cell.
Walk refine(const Constants& c, Cell start, long budget) {
    Walk w;
    std::vector<Cell> stack{start};
    while (!stack.empty()) {
        Cell cell = stack.back();
        stack.pop_back();
        if (++w.cells > budget) {
            w.exhausted = true;
            w.failed = true;
            break;
        }
        CellResult r = eval_cell(c, cell);
        if (r.ok) {
            if (r.lb < w.worst) w.worst = r.lb, w.worst_gamma = 0.5 * (cell.a + cell.b);
            continue;
        }
        if (cell.b - cell.a < 1e-10 * std::max(1.0, cell.b)) {
            w.failed = true;
            w.worst = std::min(w.worst, r.lb);
            w.worst_gamma = 0.5 * (cell.a + cell.b);
            break;
        }
        double mid = 0.5 * (cell.a + cell.b);
        stack.push_back({mid, cell.b, cell.with_g});
        stack.push_back({cell.a, mid, cell.with_g});
    }
    return w;
}

}  // namespace

i128 parse_i128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') neg = s[0] == '-', i = 1;
    if (i == s.size()) throw std::invalid_argument("bad integer: " + s);
    i128 v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer: " + s);
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    std::string out;
    while (v != 0) {
        int d = int(v % 10);
        out.push_back(char('0' + (d < 0 ? -d : d)));
        v /= 10;
    }
    if (neg) out.push_back('-');
    return {out.rbegin(), out.rend()};
}

Constants from_scaled(const std::vector<i128>& a_scaled) {
    Constants c;
    c.a_scaled = a_scaled;
    for (std::size_t j = 1; j <= a_scaled.size(); ++j) c.s.push_back(quad(0.75) + quad(j) / 2);
    return c;
}

Constants table2() {
    std::vector<i128> a;
    for (const char* s : kTable2) a.push_back(parse_i128(s));
    return from_scaled(a);
}

double g_of(double gamma) {
    double g2 = gamma * gamma;
    return g2 / std::sqrt((0.25 + g2) * (2.25 + g2));
}

quad g_of(quad gamma) {
    quad g2 = gamma * gamma;
    return g2 / sqrtq((quad(0.25) + g2) * (quad(2.25) + g2));
}

quad g_truncated(quad gamma) { return fabsq(gamma) <= 5 ? g_of(gamma) : quad(0); }

double f_of(double s, double gamma) {
    double c = 2 * s - 1;
    return 4 * c / (c * c + 4 * gamma * gamma);
}

quad F_of(quad gamma, const Constants& c) {
    quad sum = 0;
    for (int j = 0; j < c.size(); ++j) {
        quad cj = c_of(c, j);
        sum += c.a(j) * 4 * cj / (cj * cj + 4 * gamma * gamma);
    }
    return sum;
}

double F_majorant(double gamma, const Constants& c) { return double(F_of(quad(gamma), c)); }

MajorantReport verify_majorant(const Constants& c, double gamma_max, long step_budget, int jobs,
                               int sample_grid) {
    if (gamma_max < 1e6) throw std::invalid_argument("gamma_max must be at least 1e6");
    std::vector<Cell> cells = initial_cells(gamma_max, std::max(2, sample_grid));
    std::vector<Walk> walks(cells.size());
    long per_cell = std::max<long>(1, step_budget / long(cells.size()));
#pragma omp parallel for num_threads(std::max(1, jobs)) schedule(dynamic, 1)
    for (std::int64_t i = 0; i < std::int64_t(cells.size()); ++i)
        walks[i] = refine(c, cells[i], per_cell);

    MajorantReport rep;
    rep.worst_lower_bound = std::numeric_limits<double>::infinity();
    bool failed = false;
    for (const Walk& w : walks) {
        rep.cells += w.cells;
        failed |= w.failed;
        rep.budget_exhausted |= w.exhausted;
        if (w.worst < rep.worst_lower_bound) {
            rep.worst_lower_bound = w.worst;
            rep.worst_gamma = w.worst_gamma;
        }
    }
    rep.interval = check_geq("F-minus-g-on-[0,gamma_max]", failed ? -1 : rep.worst_lower_bound,
                             -1e-9, 0);
    rep.interval.kind = "sampled-certificate";

    // Beyond gamma_max: F = 4u sum_k (-1)^k M_k u^k with u = 1/(4 gamma^2) and
    // M_k = sum_j a_j c_j^(2k+1); the first two moments are exact rationals.
    i128 n0 = 0, n1 = 0;
    for (int j = 0; j < c.size(); ++j) {
        i128 cj2 = 2 * (j + 1) + 1;  // 2 c_j
        n0 += c.a_scaled[j] * cj2;
        n1 += c.a_scaled[j] * cj2 * cj2 * cj2;
    }
    quad M0 = quad(n0) / quad(20000000);
    quad M1 = quad(n1) / quad(80000000);
    quad u = 1 / (4 * quad(gamma_max) * quad(gamma_max));
    quad higher = 0;
    for (int j = 0; j < c.size(); ++j) {
        quad cj = c_of(c, j);
        quad t = cj * cj * u;
        higher += fabsq(c.a(j)) * cj * t * t / (1 - t);
    }
    quad lower = M0 - fabsq(M1) * u - higher;
    rep.tail = check_geq("F-positive-beyond-gamma_max", double(lower), 0, 0);
    rep.tail.kind = "tail-certificate";
    return rep;
}

SValue S_of(std::uint64_t n, const Constants& c) {
    quad u = 1 / sqrtq(quad(n));
    quad acc = 0, absacc = 0, weighted = 0;
    quad upow = 1;
    for (int j = c.size() - 1; j >= 0; --j) acc = acc * u + quad(c.a_scaled[j]);
    acc *= u;
    for (int j = 0; j < c.size(); ++j) {
        upow *= u;
        quad t = fabsq(quad(c.a_scaled[j])) * upow;
        absacc += t;
        weighted += quad(j + 1) * t;
    }
    quad lead = u * sqrtq(u);  // n^(-3/4)
    int steps = 2 * c.size();
    quad gam = steps * kEps / (1 - steps * kEps);
    SValue v;
    v.value = lead * acc / quad(10000000);
    quad err = gam * absacc + 4 * kEps * weighted;  // Horner rounding, error in u
    v.error = (lead * err / quad(10000000)) * (1 + 8 * kEps) + fabsq(v.value) * 8 * kEps;
    return v;
}

std::vector<quad> pair_terms(std::uint64_t n, const Constants& c) {
    std::vector<quad> out;
    quad ln = logq(quad(n));
    for (int j = 0; j < c.size(); j += 2) {
        quad t = c.a(j) * expq(-c.s[j] * ln);
        if (j + 1 < c.size()) t += c.a(j + 1) * expq(-c.s[j + 1] * ln);
        out.push_back(t);
    }
    return out;
}

namespace {

void classify(const Constants& c, std::uint64_t n, std::vector<std::uint64_t>& bad, double& worst) {
    SValue v = S_of(n, c);
    bool want_positive = n == 4;
    bool ok = want_positive ? v.value - v.error > 0 : v.value + v.error < 0;
    if (!ok) bad.push_back(n);
    if (v.error > 0) worst = std::min(worst, double(fabsq(v.value) / v.error));
}

}  // namespace

SScan scan_S_serial(const Constants& c, std::uint64_t n_max) {
    SScan s;
    s.worst_ratio = std::numeric_limits<double>::infinity();
    for (std::uint64_t n = 2; n <= n_max; ++n) classify(c, n, s.unexpected, s.worst_ratio);
    return s;
}

SScan scan_S(const Constants& c, std::uint64_t n_max, int jobs) {
    SScan s;
    double worst = std::numeric_limits<double>::infinity();
    std::int64_t count = n_max >= 2 ? std::int64_t(n_max - 1) : 0;
#pragma omp parallel num_threads(std::max(1, jobs))
    {
        std::vector<std::uint64_t> local;
        double lw = std::numeric_limits<double>::infinity();
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < count; ++i) classify(c, std::uint64_t(i) + 2, local, lw);
#pragma omp critical
        {
            s.unexpected.insert(s.unexpected.end(), local.begin(), local.end());
            worst = std::min(worst, lw);
        }
    }
    std::sort(s.unexpected.begin(), s.unexpected.end());
    s.worst_ratio = worst;
    return s;
}

std::vector<BoundEval> verify_constants(const Constants& c) {
    i128 total = 0;
    quad pole = 0, psi_half = 0, psi_shift = 0, zsum = 0;
    for (int j = 0; j < c.size(); ++j) {
        total += c.a_scaled[j];
        quad a = c.a(j), s = c.s[j];
        pole += a * (2 / s + 2 / (s - 1));
        psi_half += a * digamma(s / 2);
        psi_shift += a * digamma((s + 1) / 2);
        zsum += a * zeta_log_deriv(s);
    }
    double sum = double(quad(total) / quad(10000000));
    quad a20 = zsum + logq(quad(2)) * S_of(4, c).value;
    std::vector<BoundEval> out;
    out.push_back(check_geq("sum-a-lower", sum, 1.4999));
    out.push_back(check_leq("sum-a-upper", sum, 1.5));
    out.push_back(check_leq("pole-sum", double(pole), -1.577));
    out.push_back(check_leq("digamma-half-sum", double(psi_half), 0.6552));
    out.push_back(check_leq("digamma-shift-sum", double(psi_shift), 0.7314));
    out.push_back(check_leq("zeta-sum-with-S4", double(a20), 1.3372));
    return out;
}

}  // namespace apg::majorant
