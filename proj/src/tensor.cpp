#include "mag/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace mag {

namespace {

// Odometer over `count` indices each running 0..dim-1.  Returns false when done.
bool advance(std::vector<int>& ix, int dim) {
    for (int k = static_cast<int>(ix.size()) - 1; k >= 0; --k) {
        if (++ix[static_cast<std::size_t>(k)] < dim) return true;
        ix[static_cast<std::size_t>(k)] = 0;
    }
    return false;
}

} // namespace

Tensor contract(const Tensor& a, const Tensor& b,
                std::span<const std::pair<int, int>> pairs) {
    if (a.dim() != b.dim())
        throw TensorError("contract: dimension mismatch");
    const int dim = a.dim();

    std::vector<bool> a_used(static_cast<std::size_t>(a.rank()), false);
    std::vector<bool> b_used(static_cast<std::size_t>(b.rank()), false);
    for (auto [sa, sb] : pairs) {
        if (sa < 0 || sa >= a.rank() || sb < 0 || sb >= b.rank())
            throw TensorError("contract: slot out of range");
        if (a_used[static_cast<std::size_t>(sa)] || b_used[static_cast<std::size_t>(sb)])
            throw TensorError("contract: slot contracted twice");
        const Slot& la = a.slots()[static_cast<std::size_t>(sa)];
        const Slot& lb = b.slots()[static_cast<std::size_t>(sb)];
        if (la.var == lb.var)
            throw TensorError("contract: paired slots must have opposite variance");
        if (la.basis != lb.basis)
            throw TensorError("contract: paired slots in different bases (holonomic vs frame)");
        a_used[static_cast<std::size_t>(sa)] = true;
        b_used[static_cast<std::size_t>(sb)] = true;
    }

    std::vector<int> a_free, b_free;
    std::vector<Slot> out_slots;
    for (int s = 0; s < a.rank(); ++s)
        if (!a_used[static_cast<std::size_t>(s)]) {
            a_free.push_back(s);
            out_slots.push_back(a.slots()[static_cast<std::size_t>(s)]);
        }
    for (int s = 0; s < b.rank(); ++s)
        if (!b_used[static_cast<std::size_t>(s)]) {
            b_free.push_back(s);
            out_slots.push_back(b.slots()[static_cast<std::size_t>(s)]);
        }

    Tensor out(dim, out_slots);

    std::vector<int> free_ix(out_slots.size(), 0);
    std::vector<int> sum_ix(pairs.size(), 0);
    std::vector<int> ia(static_cast<std::size_t>(a.rank()), 0);
    std::vector<int> ib(static_cast<std::size_t>(b.rank()), 0);

    bool more_free = true;
    while (more_free) {
        double acc = 0.0;
        std::fill(sum_ix.begin(), sum_ix.end(), 0);
        bool more_sum = true;
        while (more_sum) {
            for (std::size_t k = 0; k < a_free.size(); ++k)
                ia[static_cast<std::size_t>(a_free[k])] = free_ix[k];
            for (std::size_t k = 0; k < b_free.size(); ++k)
                ib[static_cast<std::size_t>(b_free[k])] = free_ix[a_free.size() + k];
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                ia[static_cast<std::size_t>(pairs[k].first)] = sum_ix[k];
                ib[static_cast<std::size_t>(pairs[k].second)] = sum_ix[k];
            }
            acc += a.at(ia) * b.at(ib);
            more_sum = !sum_ix.empty() && advance(sum_ix, dim);
            if (sum_ix.empty()) more_sum = false;
        }
        out.at(free_ix) = acc;
        more_free = !free_ix.empty() && advance(free_ix, dim);
        if (free_ix.empty()) break;
    }
    return out;
}

Tensor trace(const Tensor& a, int slot_up, int slot_down) {
    if (slot_up < 0 || slot_up >= a.rank() || slot_down < 0 || slot_down >= a.rank() ||
        slot_up == slot_down)
        throw TensorError("trace: bad slots");
    const Slot& su = a.slots()[static_cast<std::size_t>(slot_up)];
    const Slot& sd = a.slots()[static_cast<std::size_t>(slot_down)];
    if (su.var == sd.var || su.basis != sd.basis)
        throw TensorError("trace: slots must be opposite variance in the same basis");

    const int dim = a.dim();
    std::vector<Slot> out_slots;
    std::vector<int> free_slots;
    for (int s = 0; s < a.rank(); ++s)
        if (s != slot_up && s != slot_down) {
            free_slots.push_back(s);
            out_slots.push_back(a.slots()[static_cast<std::size_t>(s)]);
        }
    Tensor out(dim, out_slots);
    std::vector<int> free_ix(out_slots.size(), 0);
    std::vector<int> ia(static_cast<std::size_t>(a.rank()), 0);
    bool more = true;
    while (more) {
        for (std::size_t k = 0; k < free_slots.size(); ++k)
            ia[static_cast<std::size_t>(free_slots[k])] = free_ix[k];
        double acc = 0.0;
        for (int c = 0; c < dim; ++c) {
            ia[static_cast<std::size_t>(slot_up)] = c;
            ia[static_cast<std::size_t>(slot_down)] = c;
            acc += a.at(ia);
        }
        out.at(free_ix) = acc;
        more = !free_ix.empty() && advance(free_ix, dim);
        if (free_ix.empty()) break;
    }
    return out;
}

namespace {

// LU factorization with partial pivoting; returns det and leaves the inverse in inv.
double lu_invert(int n, std::vector<double> m, std::vector<double>& inv) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    double det = 1.0;
    auto M = [&](int r, int c) -> double& {
        return m[static_cast<std::size_t>(r * n + c)];
    };
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(M(r, col)) > std::abs(M(piv, col))) piv = r;
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(M(piv, c), M(col, c));
            std::swap(perm[static_cast<std::size_t>(piv)], perm[static_cast<std::size_t>(col)]);
            det = -det;
        }
        det *= M(col, col);
        if (M(col, col) == 0.0) return 0.0;
        for (int r = col + 1; r < n; ++r) {
            double f = M(r, col) / M(col, col);
            M(r, col) = f;
            for (int c = col + 1; c < n; ++c) M(r, c) -= f * M(col, c);
        }
    }
    inv.assign(static_cast<std::size_t>(n * n), 0.0);
    std::vector<double> col(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
        for (int r = 0; r < n; ++r)
            col[static_cast<std::size_t>(r)] = (perm[static_cast<std::size_t>(r)] == e) ? 1.0 : 0.0;
        for (int r = 1; r < n; ++r)
            for (int c = 0; c < r; ++c)
                col[static_cast<std::size_t>(r)] -= M(r, c) * col[static_cast<std::size_t>(c)];
        for (int r = n - 1; r >= 0; --r) {
            for (int c = r + 1; c < n; ++c)
                col[static_cast<std::size_t>(r)] -= M(r, c) * inv[static_cast<std::size_t>(c * n + e)];
            inv[static_cast<std::size_t>(r * n + e)] = col[static_cast<std::size_t>(r)] / M(r, r);
        }
    }
    return det;
}

} // namespace

Tensor invert_metric(const Tensor& g, double rel_tol) {
    if (g.rank() != 2 || g.slots()[0].var != Var::down || g.slots()[1].var != Var::down)
        throw TensorError("invert_metric: expected a (0,2) tensor");
    const int n = g.dim();
    std::vector<double> m(static_cast<std::size_t>(n * n));
    double scale = 1.0;
    for (int r = 0; r < n; ++r) {
        double rowmax = 0.0;
        for (int c = 0; c < n; ++c) {
            m[static_cast<std::size_t>(r * n + c)] = g(r, c);
            rowmax = std::max(rowmax, std::abs(g(r, c)));
        }
        scale *= std::max(rowmax, 1e-300);
    }
    std::vector<double> inv;
    double det = lu_invert(n, m, inv);
    if (std::abs(det) <= rel_tol * scale)
        throw DegenerateMetricError("invert_metric: |det g| = " + std::to_string(det) +
                                    " below tolerance (scale " + std::to_string(scale) + ")");
    Basis basis = g.slots()[0].basis;
    Tensor out(n, {up(basis), up(basis)});
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out(r, c) = inv[static_cast<std::size_t>(r * n + c)];
    return out;
}

Tensor invert_rank2(const Tensor& m, double rel_tol) {
    if (m.rank() != 2)
        throw TensorError("invert_rank2: expected a rank-2 tensor");
    const int n = m.dim();
    std::vector<double> a(static_cast<std::size_t>(n * n));
    double scale = 1.0;
    for (int r = 0; r < n; ++r) {
        double rowmax = 0.0;
        for (int c = 0; c < n; ++c) {
            a[static_cast<std::size_t>(r * n + c)] = m(r, c);
            rowmax = std::max(rowmax, std::abs(m(r, c)));
        }
        scale *= std::max(rowmax, 1e-300);
    }
    std::vector<double> inv;
    double det = lu_invert(n, a, inv);
    if (std::abs(det) <= rel_tol * scale)
        throw DegenerateMetricError("invert_rank2: near-singular matrix");
    Slot s0 = m.slots()[0], s1 = m.slots()[1];
    auto flip = [](Slot s) {
        s.var = (s.var == Var::up) ? Var::down : Var::up;
        return s;
    };
    Tensor out(n, {flip(s1), flip(s0)});
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out(r, c) = inv[static_cast<std::size_t>(r * n + c)];
    return out;
}

} // namespace mag
