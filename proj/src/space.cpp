#include "mag/space.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

namespace mag {

namespace {

bool advance(std::vector<int>& ix, int dim) {
    for (int k = static_cast<int>(ix.size()) - 1; k >= 0; --k) {
        if (++ix[static_cast<std::size_t>(k)] < dim) return true;
        ix[static_cast<std::size_t>(k)] = 0;
    }
    return false;
}

Tensor covariant_from_parts(const Tensor& value, const std::vector<Tensor>& dvalue,
                            const Tensor& gamma) {
    const int n = value.dim();
    const int r = value.rank();
    for (const Slot& s : value.slots())
        if (s.basis != Basis::holonomic)
            throw TensorError("covariant_derivative: frame-basis slot; convert to holonomic first");

    std::vector<Slot> out_slots = value.slots();
    out_slots.push_back(down());
    Tensor out(n, out_slots);

    std::vector<int> ix(static_cast<std::size_t>(r) + 1, 0);
    std::vector<int> in_ix(static_cast<std::size_t>(r), 0);
    bool more = true;
    while (more) {
        const int l = ix.back();
        std::copy(ix.begin(), ix.end() - 1, in_ix.begin());
        double acc = dvalue[static_cast<std::size_t>(l)].at(in_ix);
        for (int s = 0; s < r; ++s) {
            const int is = in_ix[static_cast<std::size_t>(s)];
            double term = 0.0;
            for (int k = 0; k < n; ++k) {
                in_ix[static_cast<std::size_t>(s)] = k;
                if (value.slots()[static_cast<std::size_t>(s)].var == Var::up)
                    term += gamma(is, k, l) * value.at(in_ix);
                else
                    term -= gamma(k, is, l) * value.at(in_ix);
            }
            in_ix[static_cast<std::size_t>(s)] = is;
            acc += term;
        }
        out.at(ix) = acc;
        more = advance(ix, n);
    }
    return out;
}

} // namespace

Tensor covariant_derivative(const TensorField& f, const TensorField& gamma,
                            const Point& p) {
    const int n = p.dim();
    Tensor value = f(p);
    std::vector<Tensor> dvalue;
    dvalue.reserve(static_cast<std::size_t>(n));
    for (int axis = 0; axis < n; ++axis)
        dvalue.push_back(f.deriv ? f.deriv(axis)(p) : partial_derivative(f, p, axis));
    return covariant_from_parts(value, dvalue, gamma(p));
}

TensorField covariant_derivative_field(const TensorField& f, const TensorField& gamma,
                                       int n) {
    auto df = std::make_shared<std::vector<TensorField>>();
    for (int axis = 0; axis < n; ++axis) df->push_back(f.derivative(axis));

    TensorField out;
    out.eval = [f, gamma, df](const Point& p) {
        Tensor value = f(p);
        std::vector<Tensor> dvalue;
        dvalue.reserve(df->size());
        for (const TensorField& d : *df) dvalue.push_back(d(p));
        return covariant_from_parts(value, dvalue, gamma(p));
    };
    out.noise = std::max(f.noise, gamma.noise);
    for (const TensorField& d : *df) out.noise = std::max(out.noise, d.noise);
    return out;
}

Tensor christoffel(const TensorField& metric, const Point& p) {
    const int n = p.dim();
    Tensor g = metric(p);
    Tensor gi = invert_metric(g);
    std::vector<Tensor> dg;
    dg.reserve(static_cast<std::size_t>(n));
    for (int axis = 0; axis < n; ++axis)
        dg.push_back(metric.deriv ? metric.deriv(axis)(p) : partial_derivative(metric, p, axis));

    Tensor out(n, {up(), down(), down()});
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                double acc = 0.0;
                for (int m = 0; m < n; ++m)
                    acc += gi(i, m) * (dg[static_cast<std::size_t>(k)](m, l) +
                                       dg[static_cast<std::size_t>(l)](m, k) -
                                       dg[static_cast<std::size_t>(m)](k, l));
                out(i, k, l) = 0.5 * acc;
            }
    return out;
}

TensorField christoffel_field(const TensorField& metric, int n) {
    TensorField out;
    out.eval = [metric](const Point& p) { return christoffel(metric, p); };
    out.noise = metric.deriv ? metric.noise
                             : std::cbrt(metric.noise * metric.noise);
    (void)n;
    return out;
}

} // namespace mag
