#include "wlab/quadrature.hpp"

#include <cmath>
#include <deque>

#include "wlab/errors.hpp"

namespace wlab {

namespace {

// Kronrod 15-point nodes/weights on [-1,1] and the embedded Gauss 7 weights.
const double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
const double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
const double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Interval {
    double a, b;
    CVec3 value;
    double err;
};

// One GK15 pass on [a,b] for f(t), where f already includes dz/dt.
void gk15(const std::function<CVec3(double)>& f, double a, double b,
          CVec3& value, double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    CVec3 resK = CVec3::Zero(), resG = CVec3::Zero();
    CVec3 fc = f(c);
    resK += kWgk[7] * fc;
    resG += kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        CVec3 f1 = f(c - h * kXgk[j]);
        CVec3 f2 = f(c + h * kXgk[j]);
        resK += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resG += kWg[j / 2] * (f1 + f2);
    }
    value = h * resK;
    err = (h * (resK - resG)).norm();
}

CVec3 adapt(const std::function<CVec3(double)>& f, double a, double b,
            const QuadratureOptions& opts) {
    std::deque<Interval> work;
    Interval first{a, b, CVec3::Zero(), 0.0};
    gk15(f, a, b, first.value, first.err);
    work.push_back(first);

    CVec3 total = CVec3::Zero();
    int used = 0;
    while (!work.empty()) {
        Interval cur = work.front();
        work.pop_front();
        if (cur.err <= opts.absTol * std::max(1.0, (cur.b - cur.a) / (b - a)) ||
            cur.err <= 1e-16 * (1.0 + cur.value.norm())) {
            total += cur.value;
            continue;
        }
        if (++used > opts.maxSubdivisions)
            throw QuadratureError("quadrature subdivision budget exhausted");
        double m = 0.5 * (cur.a + cur.b);
        Interval left{cur.a, m, CVec3::Zero(), 0.0}, right{m, cur.b, CVec3::Zero(), 0.0};
        gk15(f, left.a, left.b, left.value, left.err);
        gk15(f, right.a, right.b, right.value, right.err);
        work.push_back(left);
        work.push_back(right);
    }
    return total;
}

} // namespace

CVec3 integrateAlong(const std::function<CVec3(const Cd&)>& integrand,
                     const PathInPlane& path, const QuadratureOptions& opts) {
    CVec3 total = CVec3::Zero();
    for (const auto& seg : path.segs) {
        if (const auto* l = std::get_if<LineSeg>(&seg)) {
            Cd d = l->b - l->a;
            auto f = [&](double t) -> CVec3 {
                Cd z = l->a + t * d;
                return CVec3(integrand(z) * d);
            };
            total += adapt(f, 0.0, 1.0, opts);
        } else {
            const auto& arc = std::get<ArcSeg>(seg);
            auto f = [&](double t) -> CVec3 {
                Cd e = std::polar(arc.radius, t);
                Cd z = arc.center + e;
                Cd dz = Cd(0.0, 1.0) * e; // d/dt (center + r e^{it})
                return CVec3(integrand(z) * dz);
            };
            total += adapt(f, arc.a0, arc.a1, opts);
        }
    }
    return total;
}

Cd integrateScalar(const std::function<Cd(const Cd&)>& integrand,
                   const PathInPlane& path, const QuadratureOptions& opts) {
    auto lifted = [&](const Cd& z) -> CVec3 {
        CVec3 v = CVec3::Zero();
        v(0) = integrand(z);
        return v;
    };
    return integrateAlong(lifted, path, opts)(0);
}

} // namespace wlab
