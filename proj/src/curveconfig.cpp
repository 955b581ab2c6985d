#include "evenlat/curveconfig.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <unordered_map>

namespace evenlat {

CurveConfig::CurveConfig(std::vector<std::string> labels, IntVec self_int, IntMat mult)
    : labels_(std::move(labels)), self_(std::move(self_int)), mult_(std::move(mult))
{
    const std::size_t n = labels_.size();
    if (self_.size() != n || mult_.rows() != n || mult_.cols() != n)
        throw PreconditionError("configuration sizes disagree");
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw PreconditionError("duplicate curve label '" + l + "'");
    for (std::size_t i = 0; i < n; ++i) {
        if (mult_(i, i) != 0)
            throw PreconditionError("multiplicity matrix has nonzero diagonal at " + labels_[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (mult_(i, j) < 0)
                throw PreconditionError("negative multiplicity between " + labels_[i] + " and " + labels_[j]);
            if (mult_(i, j) != mult_(j, i))
                throw PreconditionError("multiplicity matrix is not symmetric at (" + labels_[i] + "," + labels_[j] + ")");
        }
    }
}

std::size_t CurveConfig::index_of(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw PreconditionError("unknown curve label '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

bool CurveConfig::has_label(const std::string& label) const
{
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

IntMat CurveConfig::gram() const
{
    IntMat g = mult_;
    for (std::size_t i = 0; i < size(); ++i)
        g(i, i) = self_[i];
    return g;
}

CurveConfig hexagon()
{
    std::vector<std::string> labels;
    IntMat m(6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
        labels.push_back("L" + std::to_string(i));
        m(i, (i + 1) % 6) = 1;
        m((i + 1) % 6, i) = 1;
    }
    return CurveConfig(labels, IntVec(6, Integer(-1)), m);
}

InvolutionAction InvolutionAction::from_one_based(const std::vector<int>& images)
{
    InvolutionAction a;
    for (int x : images) {
        if (x < 1 || static_cast<std::size_t>(x) > images.size())
            throw PreconditionError("permutation entry " + std::to_string(x) + " out of range");
        a.perm.push_back(static_cast<std::size_t>(x - 1));
    }
    std::vector<bool> seen(images.size(), false);
    for (auto p : a.perm) {
        if (seen[p])
            throw PreconditionError("not a permutation: " + std::to_string(p + 1) + " repeats");
        seen[p] = true;
    }
    return a;
}

InvolutionAction InvolutionAction::compose(const InvolutionAction& other) const
{
    if (perm.size() != other.perm.size())
        throw PreconditionError("composing permutations of different sizes");
    InvolutionAction a;
    for (std::size_t i = 0; i < perm.size(); ++i)
        a.perm.push_back(perm[other.perm[i]]);
    return a;
}

std::string involution_defect(const CurveConfig& c, const InvolutionAction& act)
{
    const std::size_t n = c.size();
    if (act.perm.size() != n)
        return "permutation has length " + std::to_string(act.perm.size()) + ", expected " + std::to_string(n);
    std::vector<bool> hit(n, false);
    for (auto p : act.perm) {
        if (p >= n || hit[p])
            return "not a permutation";
        hit[p] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (act.perm[act.perm[i]] != i)
            return "order exceeds 2 at " + c.labels()[i];
    const IntMat g = c.gram();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (g(act.perm[i], act.perm[j]) != g(i, j))
                return "not an isometry at (" + c.labels()[i] + "," + c.labels()[j] + ")";
    return {};
}

QuotientData quotient_by_involution(const CurveConfig& c, const InvolutionAction& act, const FixedPointData& fixed,
                                    const std::vector<std::string>& names)
{
    if (std::string d = involution_defect(c, act); !d.empty())
        throw PreconditionError("quotient: " + d);
    if (!fixed.avoids_curves)
        throw PreconditionError("quotient: fixed points on the curves need ramification data (unsupported)");
    QuotientData q;
    std::vector<bool> used(c.size(), false);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (used[i])
            continue;
        if (act.perm[i] == i)
            throw PreconditionError("quotient: curve " + c.labels()[i] + " is mapped to itself (needs ramification data)");
        used[i] = used[act.perm[i]] = true;
        q.orbits.push_back({i, act.perm[i]});
    }
    if (!names.empty() && names.size() != q.orbits.size())
        throw PreconditionError("quotient: expected " + std::to_string(q.orbits.size()) + " names");
    const std::size_t k = q.orbits.size();
    const IntMat g = c.gram();
    std::vector<std::string> labels;
    IntVec self(k);
    IntMat mult(k, k);
    for (std::size_t a = 0; a < k; ++a) {
        const auto& oa = q.orbits[a];
        labels.push_back(names.empty() ? "{" + c.labels()[oa[0]] + "," + c.labels()[oa[1]] + "}" : names[a]);
        // (R + iR)^2 / 2 = R^2 + R.iR
        self[a] = g(oa[0], oa[0]) + g(oa[0], oa[1]);
        for (std::size_t b = 0; b < k; ++b)
            if (a != b)
                mult(a, b) = g(oa[0], q.orbits[b][0]) + g(oa[1], q.orbits[b][0]);
    }
    q.config = CurveConfig(labels, self, mult);
    return q;
}

std::vector<PullbackResult> double_cover_pullback(const CurveConfig& c, const CoverStep& step, std::size_t max_results)
{
    const std::size_t n = c.size();
    for (const auto& [label, k] : step.branch_points)
        if (!c.has_label(label))
            throw PreconditionError("pullback: unknown curve '" + label + "'");
    std::vector<int> k(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = step.branch_points.find(c.labels()[i]);
        if (it == step.branch_points.end())
            continue;
        k[i] = it->second;
        if (k[i] < 0 || k[i] % 2 != 0)
            throw PreconditionError("pullback: odd number of branch points on " + c.labels()[i]);
        if (k[i] > 2)
            throw PreconditionError("pullback: more than two branch points on " + c.labels()[i] + " (unsupported)");
    }
    // preimage indices in the new configuration
    std::vector<std::string> labels;
    IntVec self;
    std::vector<std::vector<std::size_t>> pre(n);
    std::map<std::string, std::vector<std::string>> names;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& l = c.labels()[i];
        if (k[i] == 0) {
            for (const char* suffix : {"'", "''"}) {
                pre[i].push_back(labels.size());
                labels.push_back(l + suffix);
                self.push_back(c.self_int()[i]);
            }
        } else {
            pre[i].push_back(labels.size());
            labels.push_back(l + "~");
            self.push_back(2 * c.self_int()[i]);
        }
        for (auto p : pre[i])
            names[l].push_back(labels[p]);
    }
    const std::size_t m = labels.size();
    IntMat base(m, m);
    struct Open {
        std::size_t i, j;
        long mult;
    };
    std::vector<Open> open;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Integer& cd = c.mult()(i, j);
            if (cd == 0)
                continue;
            if (pre[i].size() == 1 || pre[j].size() == 1) {
                // an irreducible preimage meets each sheet over every point
                const Integer each = pre[i].size() == 1 && pre[j].size() == 1 ? Integer(2 * cd) : cd;
                for (auto a : pre[i])
                    for (auto b : pre[j])
                        base(a, b) = base(b, a) = each;
                continue;
            }
            const auto& li = c.labels()[i];
            const auto& lj = c.labels()[j];
            const std::vector<int>* par = nullptr;
            if (auto it = step.sheet_parity.find({li, lj}); it != step.sheet_parity.end())
                par = &it->second;
            else if (auto it2 = step.sheet_parity.find({lj, li}); it2 != step.sheet_parity.end())
                par = &it2->second;
            if (!par) {
                open.push_back({i, j, cd.get_si()});
                continue;
            }
            if (Integer(static_cast<long>(par->size())) != cd)
                throw PreconditionError("pullback: parity data for (" + li + "," + lj + ") has wrong length");
            long t = 0;
            for (int p : *par) {
                if (p != 0 && p != 1)
                    throw PreconditionError("pullback: parity must be 0 or 1");
                t += p;
            }
            base(pre[i][0], pre[j][0]) = base(pre[j][0], pre[i][0]) = cd - t;
            base(pre[i][1], pre[j][1]) = base(pre[j][1], pre[i][1]) = cd - t;
            base(pre[i][0], pre[j][1]) = base(pre[j][1], pre[i][0]) = t;
            base(pre[i][1], pre[j][0]) = base(pre[j][0], pre[i][1]) = t;
        }
    std::size_t total = 1;
    for (const auto& o : open) {
        total *= static_cast<std::size_t>(o.mult + 1);
        if (total > max_results)
            throw GuardExceeded("pullback: more than " + std::to_string(max_results) + " open distributions");
    }
    std::vector<PullbackResult> out;
    std::vector<long> t(open.size(), 0);
    while (true) {
        IntMat mm = base;
        for (std::size_t a = 0; a < open.size(); ++a) {
            const auto& pi = pre[open[a].i];
            const auto& pj = pre[open[a].j];
            const Integer same(open[a].mult - t[a]), cross(t[a]);
            mm(pi[0], pj[0]) = mm(pj[0], pi[0]) = same;
            mm(pi[1], pj[1]) = mm(pj[1], pi[1]) = same;
            mm(pi[0], pj[1]) = mm(pj[1], pi[0]) = cross;
            mm(pi[1], pj[0]) = mm(pj[0], pi[1]) = cross;
        }
        PullbackResult r{CurveConfig(labels, self, mm), names};
        if (std::none_of(out.begin(), out.end(), [&](const PullbackResult& x) { return x.config == r.config; }))
            out.push_back(std::move(r));
        std::size_t a = 0;
        while (a < open.size() && ++t[a] > open[a].mult)
            t[a++] = 0;
        if (a == open.size())
            break;
    }
    return out;
}

CurveLattice::CurveLattice(CurveConfig config, RatMat basis, std::vector<std::string> basis_names)
    : config_(std::move(config)), basis_(std::move(basis)), names_(std::move(basis_names))
{
    if (basis_.cols() != config_.size())
        throw PreconditionError("curve lattice basis has wrong length");
    if (!names_.empty() && names_.size() != basis_.rows())
        throw PreconditionError("curve lattice: one name per basis vector");
    const RatMat g = to_rational(config_.gram());
    if (rank(g) != basis_.rows())
        throw PreconditionError("curve lattice: basis size " + std::to_string(basis_.rows()) +
                                " differs from the rank " + std::to_string(rank(g)) + " of the curve classes");
    RatMat bg = basis_ * g * basis_.transpose();
    if (!is_integral(bg))
        throw PreconditionError("curve lattice: basis Gram is not integral");
    gram_ = to_integer(bg);
    if (determinant(gram_) == 0)
        throw PreconditionError("curve lattice: basis vectors are dependent");
    gram_inv_ = inverse(bg);
}

Rational CurveLattice::pair(const RatVec& x, const RatVec& y) const { return bilinear(config_.gram(), x, y); }

bool CurveLattice::is_zero_class(const RatVec& v) const
{
    for (const auto& x : to_rational(config_.gram()).apply(v))
        if (x != 0)
            return false;
    return true;
}

RatVec CurveLattice::to_curves(const RatVec& c) const
{
    if (c.size() != basis_.rows())
        throw PreconditionError("coordinate vector has wrong length");
    return basis_.transpose().apply(c);
}

std::optional<RatVec> CurveLattice::coords(const RatVec& v) const
{
    if (v.size() != config_.size())
        throw PreconditionError("curve vector has wrong length");
    RatVec pairings = (basis_ * to_rational(config_.gram())).apply(v);
    RatVec c = gram_inv_.apply(pairings);
    RatVec diff = to_curves(c);
    for (std::size_t i = 0; i < diff.size(); ++i)
        diff[i] = v[i] - diff[i];
    if (!is_zero_class(diff))
        return std::nullopt;
    return c;
}

bool CurveLattice::contains(const RatVec& v) const
{
    auto c = coords(v);
    if (!c)
        return false;
    return std::all_of(c->begin(), c->end(), [](const Rational& x) { return is_integral(x); });
}

EvenRelation relation_from_equality(const CurveLattice& l, const std::string& name, const IntVec& lhs, const IntVec& rhs)
{
    const std::size_t n = l.config().size();
    if (lhs.size() != n || rhs.size() != n)
        throw PreconditionError("relation " + name + " has wrong length");
    RatVec diff(n);
    IntVec sum(n);
    for (std::size_t i = 0; i < n; ++i) {
        diff[i] = lhs[i] - rhs[i];
        sum[i] = lhs[i] + rhs[i];
    }
    if (!l.is_zero_class(diff))
        throw PreconditionError("relation " + name + " does not hold against every curve");
    return {name, sum};
}

EvenRelation relation_from_member(const CurveLattice& l, const std::string& name, const IntVec& coeffs)
{
    RatVec half(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        half[i] = Rational(coeffs[i]) / 2;
    if (!l.contains(half))
        throw PreconditionError("half of " + name + " is not in the lattice");
    return {name, coeffs};
}

CurveSet curve_set(const std::vector<std::size_t>& idx)
{
    CurveSet s = 0;
    for (auto i : idx) {
        if (i >= 64)
            throw PreconditionError("curve sets hold at most 64 curves");
        s |= CurveSet(1) << i;
    }
    return s;
}

std::vector<std::size_t> curve_indices(CurveSet s)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 64; ++i)
        if (s >> i & 1)
            out.push_back(i);
    return out;
}

std::string format_set(const CurveConfig& c, CurveSet s)
{
    std::string out = "(";
    bool first = true;
    for (auto i : curve_indices(s)) {
        if (!first)
            out += "+";
        out += c.labels().at(i);
        first = false;
    }
    return out + ")/2";
}

CurveSet support_mod2(const IntVec& coeffs)
{
    CurveSet s = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (mpz_odd_p(coeffs[i].get_mpz_t())) {
            if (i >= 64)
                throw PreconditionError("curve sets hold at most 64 curves");
            s |= CurveSet(1) << i;
        }
    return s;
}

namespace {

bool disjoint_four(const CurveConfig& c, CurveSet s)
{
    if (std::popcount(s) != 4)
        return false;
    auto idx = curve_indices(s);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            if (c.mult()(idx[a], idx[b]) != 0)
                return false;
    return true;
}

RatVec half_vector(CurveSet s, std::size_t n)
{
    RatVec v(n, Rational(0));
    for (auto i : curve_indices(s))
        v.at(i) = Rational(1, 2);
    return v;
}

} // namespace

std::optional<EvenFourCertificate> find_even_four_certificate(const CurveLattice& l, CurveSet start,
                                                             const std::vector<EvenRelation>& relations)
{
    const std::size_t n = l.config().size();
    if (n > 64)
        throw PreconditionError("certificate search supports at most 64 curves");
    if (n < 64 && (start >> n) != 0)
        throw PreconditionError("half-set refers to unknown curves");
    std::vector<CurveSet> moves;
    for (const auto& r : relations) {
        relation_from_member(l, r.name, r.coeffs);
        moves.push_back(support_mod2(r.coeffs));
    }
    std::unordered_map<CurveSet, std::pair<CurveSet, std::size_t>> parent;
    parent[start] = {start, relations.size()};
    std::deque<CurveSet> queue{start};
    while (!queue.empty()) {
        CurveSet s = queue.front();
        queue.pop_front();
        if (disjoint_four(l.config(), s)) {
            EvenFourCertificate cert;
            cert.start = start;
            cert.target = s;
            for (CurveSet cur = s; cur != start;) {
                auto [prev, rel] = parent[cur];
                cert.steps.push_back({rel, cur});
                cur = prev;
            }
            std::reverse(cert.steps.begin(), cert.steps.end());
            return cert;
        }
        for (std::size_t j = 0; j < moves.size(); ++j) {
            CurveSet t = s ^ moves[j];
            if (parent.emplace(t, std::make_pair(s, j)).second)
                queue.push_back(t);
        }
    }
    return std::nullopt;
}

bool replay_certificate(const CurveLattice& l, const EvenFourCertificate& cert, const std::vector<EvenRelation>& relations)
{
    const std::size_t n = l.config().size();
    CurveSet cur = cert.start;
    for (const auto& st : cert.steps) {
        if (st.relation >= relations.size())
            return false;
        const auto& r = relations[st.relation];
        if (st.after != (cur ^ support_mod2(r.coeffs)))
            return false;
        RatVec half(n);
        for (std::size_t i = 0; i < n; ++i)
            half[i] = Rational(r.coeffs[i]) / 2;
        if (!l.contains(half))
            return false;
        RatVec a = half_vector(cur, n), b = half_vector(st.after, n);
        for (std::size_t i = 0; i < n; ++i)
            b[i] -= a[i];
        if (!l.contains(b))
            return false;
        cur = st.after;
    }
    return cur == cert.target && disjoint_four(l.config(), cert.target);
}

std::optional<CurveSet> half_set_of(const RatVec& v)
{
    CurveSet s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& d = v[i].get_den();
        if (d == 1)
            continue;
        if (d != 2 || i >= 64)
            return std::nullopt;
        s |= CurveSet(1) << i;
    }
    return s;
}

} // namespace evenlat
