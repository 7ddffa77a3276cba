#include "slec/nullsz.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>

#include "slec/graph_io.hpp"

namespace slec::nullsz {

FactorProduct::FactorProduct(const std::vector<std::string>& variables)
{
    for (const auto& name : variables)
        add_variable(name);
}

VarId FactorProduct::add_variable(std::string name)
{
    if (name.empty())
        throw NullszError("empty variable name");
    if (!index_.emplace(name, variables_.size()).second)
        throw NullszError("duplicate variable " + name);
    variables_.push_back(std::move(name));
    return variables_.size() - 1;
}

VarId FactorProduct::variable(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        throw NullszError("unknown variable " + std::string(name));
    return it->second;
}

void FactorProduct::add_factor(VarId plus, VarId minus)
{
    if (plus >= variables_.size() || minus >= variables_.size())
        throw NullszError("factor refers to an unknown variable");
    if (plus == minus)
        throw NullszError("factor (" + variables_[plus] + " - " + variables_[minus] + ") is identically zero");
    factors_.push_back({plus, minus});
}

std::vector<unsigned> FactorProduct::variable_degrees() const
{
    std::vector<unsigned> deg(variables_.size(), 0);
    for (const Factor& f : factors_) {
        ++deg[f.plus];
        ++deg[f.minus];
    }
    return deg;
}

ExponentVector FactorProduct::exponents(const std::vector<std::pair<std::string, unsigned>>& named) const
{
    ExponentVector t(variables_.size(), 0);
    for (const auto& [name, e] : named)
        t[variable(name)] = e;
    return t;
}

BigInt FactorProduct::evaluate(const std::vector<BigInt>& point) const
{
    if (point.size() != variables_.size())
        throw NullszError("evaluation point has the wrong dimension");
    BigInt value = 1;
    for (const Factor& f : factors_)
        value *= point[f.plus] - point[f.minus];
    return value;
}

namespace {

using Key = unsigned __int128;

struct KeyHash {
    std::size_t operator()(Key k) const noexcept
    {
        auto lo = static_cast<std::uint64_t>(k);
        auto hi = static_cast<std::uint64_t>(k >> 64);
        std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6) + (lo >> 2));
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

struct Overflow {};

struct Checked {
    std::int64_t v = 0;

    friend bool operator==(const Checked&, const Checked&) = default;

    void add(std::int64_t x)
    {
        if (__builtin_add_overflow(v, x, &v))
            throw Overflow{};
    }
    void sub(std::int64_t x)
    {
        if (__builtin_sub_overflow(v, x, &v))
            throw Overflow{};
    }
};

struct Layout {
    std::vector<unsigned> offset;
    std::vector<unsigned> width;
    std::vector<unsigned> cap;

    [[nodiscard]] unsigned get(Key k, VarId v) const
    {
        if (width[v] == 0)
            return 0;
        return static_cast<unsigned>((k >> offset[v]) & ((Key{1} << width[v]) - 1));
    }
    [[nodiscard]] Key unit(VarId v) const { return Key{1} << offset[v]; }
};

std::vector<Factor> greedy_order(const FactorProduct& p)
{
    const auto& factors = p.factors();
    std::vector<unsigned> remaining = p.variable_degrees();
    std::vector<bool> active(p.variables().size(), false), used(factors.size(), false);
    std::vector<Factor> order;
    for (std::size_t step = 0; step < factors.size(); ++step) {
        std::size_t best = factors.size();
        int best_new = 3, best_retired = -1;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (used[i])
                continue;
            const Factor& f = factors[i];
            int fresh = int(!active[f.plus]) + int(!active[f.minus]);
            int retired = int(remaining[f.plus] == 1) + int(remaining[f.minus] == 1);
            if (fresh < best_new || (fresh == best_new && retired > best_retired)) {
                best = i;
                best_new = fresh;
                best_retired = retired;
            }
        }
        const Factor& f = factors[best];
        used[best] = true;
        active[f.plus] = active[f.minus] = true;
        --remaining[f.plus];
        --remaining[f.minus];
        order.push_back(f);
    }
    return order;
}

template <class Coef, class Ops>
Coef run_dp(const std::vector<Factor>& order, const ExponentVector& target, const Layout& layout,
            std::vector<unsigned> remaining, bool prune, Ops ops)
{
    std::unordered_map<Key, Coef, KeyHash> current, next;
    current.emplace(Key{0}, Coef(1));
    for (const Factor& f : order) {
        --remaining[f.plus];
        --remaining[f.minus];
        next.clear();
        next.reserve(current.size() * 2);
        for (const auto& [key, coef] : current) {
            const unsigned ea = layout.get(key, f.plus), eb = layout.get(key, f.minus);
            auto feasible = [&](unsigned na, unsigned nb) {
                if (na > layout.cap[f.plus] || nb > layout.cap[f.minus])
                    return false;
                if (!prune)
                    return true;
                return na + remaining[f.plus] >= target[f.plus] && nb + remaining[f.minus] >= target[f.minus];
            };
            if (feasible(ea + 1, eb))
                ops.add(next[key + layout.unit(f.plus)], coef);
            if (feasible(ea, eb + 1))
                ops.sub(next[key + layout.unit(f.minus)], coef);
        }
        std::erase_if(next, [](const auto& kv) { return kv.second == Coef(0); });
        std::swap(current, next);
        if (current.empty())
            break;
    }
    Key target_key = 0;
    for (VarId v = 0; v < target.size(); ++v)
        target_key += Key{target[v]} << layout.offset[v];
    auto it = current.find(target_key);
    return it == current.end() ? Coef(0) : it->second;
}

struct CheckedOps {
    void add(Checked& acc, const Checked& x) const { acc.add(x.v); }
    void sub(Checked& acc, const Checked& x) const { acc.sub(x.v); }
};

struct BigOps {
    void add(BigInt& acc, const BigInt& x) const { acc += x; }
    void sub(BigInt& acc, const BigInt& x) const { acc -= x; }
};

}  // namespace

BigInt coefficient_of_monomial(const FactorProduct& p, const ExponentVector& target, const CoefficientOptions& options)
{
    const std::size_t nv = p.variables().size();
    if (target.size() != nv)
        throw NullszError("target has " + std::to_string(target.size()) + " exponents for " + std::to_string(nv) +
                          " variables");
    std::size_t total = 0;
    for (unsigned t : target)
        total += t;
    if (total != p.degree())
        throw NullszError("target degree " + std::to_string(total) + " differs from the product degree " +
                          std::to_string(p.degree()));

    const std::vector<unsigned> deg = p.variable_degrees();
    for (VarId v = 0; v < nv; ++v)
        if (target[v] > deg[v])
            return 0;

    Layout layout;
    layout.offset.resize(nv);
    layout.width.resize(nv);
    layout.cap.resize(nv);
    unsigned bits = 0;
    for (VarId v = 0; v < nv; ++v) {
        layout.cap[v] = options.prune ? target[v] : deg[v];
        layout.width[v] = static_cast<unsigned>(std::bit_width(layout.cap[v]));
        layout.offset[v] = bits;
        bits += layout.width[v];
    }
    if (bits > 128)
        throw NullszError("exponent vectors need " + std::to_string(bits) + " bits; at most 128 are supported");

    const std::vector<Factor> order = options.reorder ? greedy_order(p) : p.factors();
    try {
        Checked c = run_dp<Checked>(order, target, layout, deg, options.prune, CheckedOps{});
        return c.v;
    } catch (const Overflow&) {
        return run_dp<BigInt>(order, target, layout, deg, options.prune, BigOps{});
    }
}

namespace {

struct Brute {
    const std::vector<Factor>& factors;
    const ExponentVector& target;
    std::vector<unsigned> tally;
    std::vector<unsigned> remaining;

    std::int64_t run(std::size_t i)
    {
        if (i == factors.size())
            return tally == target ? 1 : 0;
        const Factor& f = factors[i];
        --remaining[f.plus];
        --remaining[f.minus];
        std::int64_t sum = 0;
        for (int side = 0; side < 2; ++side) {
            VarId chosen = side == 0 ? f.plus : f.minus;
            ++tally[chosen];
            bool ok = tally[chosen] <= target[chosen] && tally[f.plus] + remaining[f.plus] >= target[f.plus] &&
                      tally[f.minus] + remaining[f.minus] >= target[f.minus];
            if (ok)
                sum += side == 0 ? run(i + 1) : -run(i + 1);
            --tally[chosen];
        }
        ++remaining[f.plus];
        ++remaining[f.minus];
        return sum;
    }
};

}  // namespace

BigInt brute_coefficient_oracle(const FactorProduct& p, const ExponentVector& target)
{
    if (p.degree() > 22)
        throw NullszError("brute force oracle limited to 22 factors");
    if (target.size() != p.variables().size())
        throw NullszError("target dimension mismatch");
    Brute b{p.factors(), target, std::vector<unsigned>(target.size(), 0), p.variable_degrees()};
    return b.run(0);
}

FactorProduct build_strong_conflict_polynomial(const ConflictGraph& cg, const std::vector<EdgeId>& ordering,
                                              const std::vector<std::string>& names)
{
    const std::size_t n = cg.node_count();
    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        if (ordering[i] >= n)
            throw NullszError("ordering names node " + std::to_string(ordering[i]) + " outside the conflict graph");
        if (position[ordering[i]] != n)
            throw NullszError("ordering repeats node " + std::to_string(ordering[i]));
        position[ordering[i]] = i;
    }
    if (ordering.size() != n)
        throw NullszError("ordering covers " + std::to_string(ordering.size()) + " of " + std::to_string(n) + " nodes");
    if (!names.empty() && names.size() != n)
        throw NullszError("need one name per node");

    FactorProduct p;
    for (EdgeId e : ordering)
        p.add_variable(names.empty() ? "e" + std::to_string(e) : names[e]);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> later;
        for (EdgeId f : cg.neighbors(ordering[i]))
            if (position[f] > i)
                later.push_back(position[f]);
        std::sort(later.begin(), later.end());
        for (std::size_t j : later)
            p.add_factor(i, j);
    }
    return p;
}

// SparsePoly

SparsePoly SparsePoly::constant(BigInt c)
{
    SparsePoly p;
    p.add_term({}, c);
    return p;
}

void SparsePoly::add_term(Monomial m, const BigInt& c)
{
    std::sort(m.begin(), m.end());
    Monomial merged;
    for (const auto& [v, e] : m) {
        if (e == 0)
            continue;
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.emplace_back(v, e);
    }
    auto [it, inserted] = terms_.try_emplace(std::move(merged), c);
    if (!inserted)
        it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

namespace {

SparsePoly::Monomial times_var(const SparsePoly::Monomial& m, VarId v)
{
    SparsePoly::Monomial r = m;
    auto it = std::lower_bound(r.begin(), r.end(), v, [](const auto& term, VarId x) { return term.first < x; });
    if (it != r.end() && it->first == v)
        ++it->second;
    else
        r.insert(it, {v, 1});
    return r;
}

unsigned exponent_in(const SparsePoly::Monomial& m, VarId v)
{
    auto it = std::lower_bound(m.begin(), m.end(), v, [](const auto& term, VarId x) { return term.first < x; });
    return it != m.end() && it->first == v ? it->second : 0;
}

}  // namespace

SparsePoly SparsePoly::times_factor(const Factor& f) const
{
    SparsePoly r;
    for (const auto& [m, c] : terms_) {
        r.add_term(times_var(m, f.plus), c);
        r.add_term(times_var(m, f.minus), -c);
    }
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& other) const
{
    SparsePoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : other.terms_) {
            Monomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            r.add_term(std::move(m), c1 * c2);
        }
    return r;
}

SparsePoly SparsePoly::operator-() const
{
    SparsePoly r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

SparsePoly SparsePoly::operator+(const SparsePoly& other) const
{
    SparsePoly r = *this;
    for (const auto& [m, c] : other.terms_)
        r.add_term(m, c);
    return r;
}

SparsePoly SparsePoly::coefficient_of(const std::map<VarId, unsigned>& partial) const
{
    SparsePoly r;
    for (const auto& [m, c] : terms_) {
        bool match = std::all_of(partial.begin(), partial.end(),
                                 [&m](const auto& ve) { return exponent_in(m, ve.first) == ve.second; });
        if (!match)
            continue;
        Monomial rest;
        for (const auto& ve : m)
            if (!partial.contains(ve.first))
                rest.push_back(ve);
        r.add_term(std::move(rest), c);
    }
    return r;
}

BigInt SparsePoly::evaluate(const std::vector<BigInt>& point) const
{
    BigInt total = 0;
    for (const auto& [m, c] : terms_) {
        BigInt t = c;
        for (const auto& [v, e] : m) {
            if (v >= point.size())
                throw NullszError("evaluation point too short");
            t *= boost::multiprecision::pow(point[v], e);
        }
        total += t;
    }
    return total;
}

std::string SparsePoly::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        bool coef_shown = mag != 1 || m.empty();
        if (coef_shown)
            out << mag;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (coef_shown || i > 0)
                out << '*';
            out << (m[i].first < names.size() ? names[m[i].first] : "v" + std::to_string(m[i].first));
            if (m[i].second > 1)
                out << '^' << m[i].second;
        }
    }
    return out.str();
}

SparsePoly SparsePoly::from_terms(const std::vector<std::pair<BigInt, Monomial>>& terms)
{
    SparsePoly p;
    for (const auto& [c, m] : terms)
        p.add_term(m, c);
    return p;
}

SparsePoly expand(const FactorProduct& p)
{
    SparsePoly r = SparsePoly::constant(1);
    for (const Factor& f : p.factors())
        r = r.times_factor(f);
    return r;
}

// Cycle configurations

FactorProduct cycle_conflict_polynomial(std::size_t k)
{
    if (k < 3)
        throw NullszError("cycle length must be at least 3");
    FactorProduct p;
    for (std::size_t i = 0; i < k; ++i)
        p.add_variable("x" + std::to_string(i));
    for (std::size_t i = 0; i < k; ++i)
        p.add_variable("y" + std::to_string(i));
    auto x = [k](std::size_t i) { return i % k; };
    auto y = [k](std::size_t i) { return k + i % k; };
    for (std::size_t i = 0; i < k; ++i) {
        p.add_factor(x(i), x(i + 1));
        p.add_factor(x(i), x(i + 2));
        p.add_factor(y(i), y(i + 1));
        p.add_factor(x(i), y(i + k - 1));
        p.add_factor(x(i), y(i));
        p.add_factor(x(i), y(i + 1));
        p.add_factor(x(i), y(i + 2));
    }
    return p;
}

ExponentVector cycle_target(std::size_t k)
{
    if (k < 6)
        throw NullszError("cycle target needs k >= 6");
    static constexpr unsigned head_x[] = {4, 2, 5, 5, 4, 5};
    static constexpr unsigned head_y[] = {3, 2, 3, 3, 3, 3};
    ExponentVector t(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        t[i] = i < 6 ? head_x[i] : 4;
        t[k + i] = i < 6 ? head_y[i] : 3;
    }
    return t;
}

FactorProduct six_cycle_polynomial()
{
    FactorProduct p;
    for (int i = 0; i < 6; ++i)
        p.add_variable("x" + std::to_string(i));
    for (int i = 1; i < 6; ++i)
        p.add_variable("y" + std::to_string(i));
    auto x = [](int i) { return "x" + std::to_string(i % 6); };
    auto y = [](int i) { return "y" + std::to_string(i); };
    for (int i = 0; i < 6; ++i) {
        p.add_factor(x(i), x(i + 1));
        p.add_factor(x(i), x(i + 2));
    }
    const std::vector<std::pair<int, std::vector<int>>> xy = {
        {0, {1, 2, 5}}, {1, {2, 3, 1}}, {2, {3, 4, 2, 1}}, {3, {4, 5, 3, 2}}, {4, {5, 4, 3}}, {5, {1, 5, 4}}};
    for (const auto& [i, ys] : xy)
        for (int j : ys)
            p.add_factor(x(i), y(j));
    for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4}, {2, 5}})
        p.add_factor(y(a), y(b));
    return p;
}

ExponentVector six_cycle_target()
{
    return six_cycle_polynomial().exponents({{"x0", 4},
                                             {"x1", 4},
                                             {"x2", 5},
                                             {"x3", 5},
                                             {"x4", 4},
                                             {"x5", 4},
                                             {"y1", 2},
                                             {"y2", 3},
                                             {"y3", 2},
                                             {"y4", 3},
                                             {"y5", 2}});
}

namespace {

// Multiplies `factors` into `poly`, keeping only terms that can still meet `target` on the
// extracted variables, then extracts.
SparsePoly multiply_and_extract(SparsePoly poly, const std::vector<Factor>& factors,
                                const std::map<VarId, unsigned>& target)
{
    std::map<VarId, unsigned> remaining;
    for (const auto& [v, e] : target)
        remaining[v] = 0;
    for (const Factor& f : factors)
        for (VarId v : {f.plus, f.minus})
            if (auto it = remaining.find(v); it != remaining.end())
                ++it->second;
    auto viable = [&](const SparsePoly::Monomial& m) {
        for (const auto& [v, t] : target) {
            unsigned e = exponent_in(m, v);
            if (e > t || e + remaining[v] < t)
                return false;
        }
        return true;
    };
    for (const Factor& f : factors) {
        for (VarId v : {f.plus, f.minus})
            if (auto it = remaining.find(v); it != remaining.end())
                --it->second;
        SparsePoly next;
        for (const auto& [m, c] : poly.terms()) {
            auto a = times_var(m, f.plus);
            if (viable(a))
                next.add_term(std::move(a), c);
            auto b = times_var(m, f.minus);
            if (viable(b))
                next.add_term(std::move(b), -c);
        }
        poly = std::move(next);
    }
    return poly.coefficient_of(target);
}

}  // namespace

ChainTrace ck_chain_trace(std::size_t k)
{
    if (k < 7)
        throw NullszError("staged computation needs k >= 7");
    const FactorProduct p = cycle_conflict_polynomial(k);
    const ExponentVector target = cycle_target(k);

    std::vector<std::vector<std::size_t>> groups{{2, 3, 4}, {5, 6}};
    for (std::size_t i = 7; i < k; ++i)
        groups.push_back({i});
    groups.push_back({0});
    groups.push_back({1});

    ChainTrace trace;
    trace.k = k;
    trace.names = p.variables();
    std::vector<bool> used(p.degree(), false);
    std::vector<std::vector<std::size_t>> by_var(p.variables().size());
    for (std::size_t f = 0; f < p.degree(); ++f) {
        by_var[p.factors()[f].plus].push_back(f);
        by_var[p.factors()[f].minus].push_back(f);
    }
    SparsePoly residual = SparsePoly::constant(1);
    for (const auto& group : groups) {
        std::set<VarId> touch;
        for (std::size_t i : group) {
            touch.insert(i);
            touch.insert(k + i);
        }
        std::map<VarId, unsigned> extract;
        for (VarId v : touch)
            extract[v] = target[v];
        if (group == std::vector<std::size_t>{0})
            touch.insert({1, k + 1});  // the last factors, on x1 and y1 only
        std::set<std::size_t> picked;  // factor positions, so the declared order is kept
        for (VarId v : touch)
            for (std::size_t f : by_var[v])
                if (!used[f])
                    picked.insert(f);
        std::vector<Factor> batch;
        for (std::size_t f : picked) {
            used[f] = true;
            batch.push_back(p.factors()[f]);
        }
        residual = multiply_and_extract(std::move(residual), batch, extract);
        trace.stages.push_back({group, batch.size(), residual});
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw std::logic_error("staged computation left factors unused");
    const auto& terms = residual.terms();
    if (terms.size() > 1 || (terms.size() == 1 && !terms.begin()->first.empty()))
        throw std::logic_error("staged computation left a non-constant residual");
    trace.coefficient = terms.empty() ? BigInt(0) : terms.begin()->second;
    return trace;
}

BigInt ck_chain_coefficient(std::size_t k)
{
    return ck_chain_trace(k).coefficient;
}

// Product files

namespace {

std::vector<std::string> split_words(std::string_view s)
{
    std::vector<std::string> words;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w)
        words.push_back(w);
    return words;
}

bool valid_name(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
    });
}

}  // namespace

ProductFile parse_product_file(std::string_view text)
{
    ProductFile result;
    bool have_vars = false, have_target = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto words = split_words(line);
        if (words.empty())
            continue;
        if (have_target)
            throw ParseError(line_no, "content after the target line");
        if (words[0] == "vars:") {
            if (have_vars)
                throw ParseError(line_no, "repeated vars line");
            have_vars = true;
            for (std::size_t i = 1; i < words.size(); ++i) {
                if (!valid_name(words[i]))
                    throw ParseError(line_no, "bad variable name '" + words[i] + "'");
                try {
                    result.product.add_variable(words[i]);
                } catch (const NullszError& e) {
                    throw ParseError(line_no, e.what());
                }
            }
            continue;
        }
        if (!have_vars)
            throw ParseError(line_no, "expected 'vars:' first");
        if (words[0] == "target:") {
            have_target = true;
            result.target.assign(result.product.variables().size(), 0);
            for (std::size_t i = 1; i < words.size(); ++i) {
                std::string_view w = words[i];
                unsigned e = 1;
                if (auto caret = w.find('^'); caret != std::string_view::npos) {
                    std::string_view digits = w.substr(caret + 1);
                    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
                    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
                        throw ParseError(line_no, "bad exponent in '" + words[i] + "'");
                    w = w.substr(0, caret);
                }
                try {
                    result.target[result.product.variable(w)] += e;
                } catch (const NullszError& err) {
                    throw ParseError(line_no, err.what());
                }
            }
            continue;
        }
        if (words.size() != 3 || words[1] != "-")
            throw ParseError(line_no, "expected a factor 'a - b'");
        try {
            result.product.add_factor(words[0], words[2]);
        } catch (const NullszError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!have_vars)
        throw ParseError(0, "missing 'vars:' line");
    if (!have_target)
        throw ParseError(0, "missing 'target:' line");
    return result;
}

std::string write_product_file(const FactorProduct& p, const ExponentVector& target)
{
    std::ostringstream out;
    out << "vars:";
    for (const auto& v : p.variables())
        out << ' ' << v;
    out << '\n';
    for (const Factor& f : p.factors())
        out << p.variables()[f.plus] << " - " << p.variables()[f.minus] << '\n';
    out << "target:";
    for (VarId v = 0; v < target.size() && v < p.variables().size(); ++v)
        if (target[v] > 0) {
            out << ' ' << p.variables()[v];
            if (target[v] > 1)
                out << '^' << target[v];
        }
    out << '\n';
    return out.str();
}

}  // namespace slec::nullsz
