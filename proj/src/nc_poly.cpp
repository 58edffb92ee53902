#include "ncq/nc_poly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "ncq/errors.hpp"

namespace ncq {

int var_h(int k) {
    if (k < 1 || k > kMaxH)
        throw OrderTooHigh("increment variable h" + std::to_string(k) +
                           " is outside h1..h" + std::to_string(kMaxH));
    return k;
}

std::string var_name(int v) {
    if (v == kVarX) return "x";
    if (v == kVarY) return "y";
    return "h" + std::to_string(v);
}

NcPoly NcPoly::constant(const Element& c) {
    NcPoly p;
    p.words.push_back(NcWord{{c}, {}});
    return p;
}

NcPoly NcPoly::variable(int v, const AlgebraSpec& alg) {
    NcPoly p;
    p.words.push_back(NcWord{{alg.unit(), alg.unit()}, {v}});
    return p;
}

NcPoly add(const NcPoly& p, const NcPoly& q) {
    NcPoly r = p;
    r.words.insert(r.words.end(), q.words.begin(), q.words.end());
    return r;
}

NcPoly neg(const NcPoly& p) {
    NcPoly r = p;
    for (auto& w : r.words)
        if (!w.constants.empty()) w.constants.front() = neg(w.constants.front());
    return r;
}

NcPoly sub(const NcPoly& p, const NcPoly& q) { return add(p, neg(q)); }

NcPoly scale(const Rational& c, const NcPoly& p) {
    NcPoly r = p;
    for (auto& w : r.words)
        if (!w.constants.empty()) w.constants.front() = scale(c, w.constants.front());
    return r;
}

NcPoly mul(const NcPoly& p, const NcPoly& q, const AlgebraSpec& alg) {
    NcPoly r;
    r.words.reserve(p.words.size() * q.words.size());
    for (const auto& wp : p.words)
        for (const auto& wq : q.words) {
            NcWord w;
            w.vars = wp.vars;
            w.vars.insert(w.vars.end(), wq.vars.begin(), wq.vars.end());
            w.constants.assign(wp.constants.begin(), wp.constants.end() - 1);
            w.constants.push_back(
                mul(wp.constants.back(), wq.constants.front(), alg));
            w.constants.insert(w.constants.end(), wq.constants.begin() + 1,
                               wq.constants.end());
            r.words.push_back(std::move(w));
        }
    return r;
}

NcPoly pow(const NcPoly& p, int n, const AlgebraSpec& alg) {
    if (n < 0) throw SemanticError("negative polynomial power");
    NcPoly r = NcPoly::constant(alg.unit());
    for (int i = 0; i < n; ++i) r = mul(r, p, alg);
    return r;
}

NcPoly normalized(const NcPoly& p) {
    // Two merge rules, both exact identities: (a) words equal up to central
    // scalar factors in their constants merge by weight; (b) words then
    // identical in variables and interior constants merge by adding the
    // leading constants (linearity in the c_0 slot).
    using Key = std::pair<std::vector<int>, std::vector<Element>>;
    // Stage (a) only needs exact equality classes — the canonical word order
    // is imposed by the by_tail map below — so group through hash buckets
    // (with exact == verification) instead of ordered comparisons.
    std::vector<std::pair<Key, Rational>> groups;
    groups.reserve(p.words.size());
    std::unordered_map<size_t, std::vector<size_t>> buckets;
    for (const auto& w : p.words) {
        Rational weight = 1;
        std::vector<Element> cs = w.constants;
        bool zero = false;
        for (auto& c : cs) {
            int lead = -1;
            for (int i = 0; i < c.dim(); ++i)
                if (!c[i].is_zero()) {
                    lead = i;
                    break;
                }
            if (lead < 0) {
                zero = true;
                break;
            }
            Rational l = c[lead];
            weight *= l;
            c = scale(Rational(1) / l, c);
        }
        if (zero) continue;
        size_t h = 0;
        boost::hash_combine(h, w.vars);
        for (const auto& c : cs)
            for (int i = 0; i < c.dim(); ++i) boost::hash_combine(h, c[i]);
        Key key{w.vars, std::move(cs)};
        bool merged = false;
        for (size_t gi : buckets[h])
            if (groups[gi].first == key) {
                groups[gi].second += weight;
                merged = true;
                break;
            }
        if (!merged) {
            buckets[h].push_back(groups.size());
            groups.emplace_back(std::move(key), std::move(weight));
        }
    }
    std::map<Key, Element> by_tail;  // key: (vars, interior constants)
    for (auto& [key, weight] : groups) {
        if (weight.is_zero()) continue;
        Element lead = scale(weight, key.second.front());
        Key tail{key.first, {key.second.begin() + 1, key.second.end()}};
        auto it = by_tail.find(tail);
        if (it == by_tail.end())
            by_tail.emplace(std::move(tail), std::move(lead));
        else
            it->second = add(it->second, lead);
    }
    NcPoly r;
    for (auto& [tail, lead] : by_tail) {
        if (lead.is_zero()) continue;
        NcWord w;
        w.vars = tail.first;
        w.constants.reserve(tail.second.size() + 1);
        w.constants.push_back(lead);
        w.constants.insert(w.constants.end(), tail.second.begin(),
                           tail.second.end());
        r.words.push_back(std::move(w));
    }
    return r;
}

int degree_in(const NcPoly& p, int v) {
    int deg = 0;
    for (const auto& w : p.words)
        deg = std::max(deg,
                       static_cast<int>(std::count(w.vars.begin(), w.vars.end(), v)));
    return deg;
}

int total_degree(const NcPoly& p) {
    int deg = 0;
    for (const auto& w : p.words) deg = std::max(deg, static_cast<int>(w.vars.size()));
    return deg;
}

bool uses_var(const NcPoly& p, int v) {
    for (const auto& w : p.words)
        if (std::find(w.vars.begin(), w.vars.end(), v) != w.vars.end()) return true;
    return false;
}

std::vector<int> variables_of(const NcPoly& p) {
    std::set<int> s;
    for (const auto& w : p.words) s.insert(w.vars.begin(), w.vars.end());
    return std::vector<int>(s.begin(), s.end());
}

NcPoly substitute(const NcPoly& p, int v, const NcPoly& r, const AlgebraSpec& alg) {
    // a syntactically zero replacement annihilates every word containing v
    bool r_zero = normalized(r).words.empty();
    NcPoly out;
    for (const auto& w : p.words) {
        if (r_zero &&
            std::find(w.vars.begin(), w.vars.end(), v) != w.vars.end())
            continue;
        NcPoly acc = NcPoly::constant(w.constants.front());
        for (size_t t = 0; t < w.vars.size(); ++t) {
            const NcPoly& factor_base =
                w.vars[t] == v ? r : NcPoly::variable(w.vars[t], alg);
            acc = mul(acc, factor_base, alg);
            acc = mul(acc, NcPoly::constant(w.constants[t + 1]), alg);
        }
        out = add(out, acc);
    }
    return normalized(out);
}

NcPoly substitute_const(const NcPoly& p, int v, const Element& c,
                        const AlgebraSpec& alg) {
    return substitute(p, v, NcPoly::constant(c), alg);
}

NcPoly rename_var(const NcPoly& p, int v, int w) {
    NcPoly r = p;
    for (auto& word : r.words)
        for (auto& var : word.vars)
            if (var == v) var = w;
    return r;
}

int pack_indet(int var, int coord) { return (var + 1) * 64 + coord; }

std::pair<int, int> unpack_indet(int packed) {
    return {packed / 64 - 1, packed % 64};
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = 0, db = 0;
    for (const auto& [pid, e] : a) da += e;
    for (const auto& [pid, e] : b) db += e;
    if (da != db) return da < db;
    return a < b;
}

bool CoordinateForm::is_zero() const {
    for (const auto& comp : components)
        if (!comp.empty()) return false;
    return true;
}

CoordinateForm cf_sub(const CoordinateForm& a, const CoordinateForm& b) {
    if (a.dim != b.dim) throw DimensionError("coordinate form dimension mismatch");
    CoordinateForm r = a;
    for (int j = 0; j < r.dim; ++j)
        for (const auto& [mono, coeff] : b.components[j]) {
            auto it = r.components[j].find(mono);
            if (it == r.components[j].end()) {
                r.components[j].emplace(mono, -coeff);
            } else {
                it->second -= coeff;
                if (it->second.is_zero()) r.components[j].erase(it);
            }
        }
    return r;
}

bool semantic_eq(const NcPoly& p, const NcPoly& q, const AlgebraSpec& alg) {
    if (normalized(p) == normalized(q)) return true;
    return expand(p, alg) == expand(q, alg);
}

bool is_semantically_zero(const NcPoly& p, const AlgebraSpec& alg) {
    if (normalized(p).words.empty()) return true;
    return expand(p, alg).is_zero();
}

Element eval(const NcPoly& p, const Bindings& bind, const AlgebraSpec& alg) {
    auto lookup = [&](int v) -> const Element& {
        for (const auto& [var, val] : bind)
            if (var == v) {
                if (val.dim() != alg.dim())
                    throw DimensionError("binding for " + var_name(v) +
                                         " has wrong dimension");
                return val;
            }
        throw UnboundVariable("no binding for variable " + var_name(v));
    };
    Element total = alg.zero();
    for (const auto& w : p.words) {
        Element acc = w.constants.front();
        for (size_t t = 0; t < w.vars.size(); ++t) {
            acc = mul(acc, lookup(w.vars[t]), alg);
            acc = mul(acc, w.constants[t + 1], alg);
        }
        total = add(total, acc);
    }
    return total;
}

const Element& PolyTensor::at(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != arity)
        throw DimensionError("tensor index arity mismatch");
    size_t flat = 0;
    for (int i : idx) {
        if (i < 0 || i >= dim) throw DimensionError("tensor index out of range");
        flat = flat * dim + static_cast<size_t>(i);
    }
    return entries[flat];
}

PolyTensor polylinear_coords(const NcPoly& p, const AlgebraSpec& alg) {
    auto vars = variables_of(p);
    int n = static_cast<int>(vars.size());
    for (int t = 0; t < n; ++t)
        if (vars[t] != t + 1)
            throw NotMultilinear(
                "polynomial must use exactly the variables h1..hn, found " +
                var_name(vars[t]));
    for (const auto& w : p.words) {
        if (static_cast<int>(w.vars.size()) != n)
            throw NotMultilinear("a word misses some increment variable");
        std::vector<int> sorted = w.vars;
        std::sort(sorted.begin(), sorted.end());
        for (int t = 0; t < n; ++t)
            if (sorted[t] != t + 1)
                throw NotMultilinear(
                    "a word is not multilinear in the increment variables");
    }
    PolyTensor tensor;
    tensor.arity = n;
    tensor.dim = alg.dim();
    size_t count = 1;
    for (int t = 0; t < n; ++t) count *= alg.dim();
    tensor.entries.resize(count);
#pragma omp parallel for schedule(static)
    for (long long flat = 0; flat < static_cast<long long>(count); ++flat) {
        Bindings bind;
        size_t rest = static_cast<size_t>(flat);
        std::vector<int> idx(n);
        for (int t = n - 1; t >= 0; --t) {
            idx[t] = static_cast<int>(rest % alg.dim());
            rest /= alg.dim();
        }
        for (int t = 0; t < n; ++t) bind.emplace_back(t + 1, alg.basis_element(idx[t]));
        tensor.entries[flat] = eval(p, bind, alg);
    }
    return tensor;
}

bool is_symmetric(const NcPoly& p, const std::vector<int>& vars,
                  const AlgebraSpec& alg) {
    // adjacent transpositions generate the full symmetric group, so checking
    // them suffices; p is normalized (and expanded, if needed) only once
    constexpr int kScratch = 999;
    NcPoly np = normalized(p);
    bool have_ep = false;
    CoordinateForm ep;
    for (size_t a = 0; a + 1 < vars.size(); ++a) {
        NcPoly q = rename_var(p, vars[a], kScratch);
        q = rename_var(q, vars[a + 1], vars[a]);
        q = rename_var(q, kScratch, vars[a + 1]);
        if (normalized(q) == np) continue;
        if (!have_ep) {
            ep = expand(p, alg);
            have_ep = true;
        }
        if (expand(q, alg) != ep) return false;
    }
    return true;
}

// --- canonical text ---------------------------------------------------------

namespace {

bool is_unit_element(const Element& c) {
    if (c.dim() == 0) return false;
    if (c[0] != 1) return false;
    for (int i = 1; i < c.dim(); ++i)
        if (!c[i].is_zero()) return false;
    return true;
}

bool is_pure_rational(const Element& c) {
    for (int i = 1; i < c.dim(); ++i)
        if (!c[i].is_zero()) return false;
    return true;
}

void print_word(std::ostringstream& out, const NcWord& w, bool negate) {
    std::vector<std::string> factors;
    Element c0 = negate ? neg(w.constants.front()) : w.constants.front();
    auto push_constant = [&factors](const Element& c) {
        if (is_unit_element(c)) return;
        if (is_pure_rational(c))
            factors.push_back(to_string(c[0]));
        else
            factors.push_back("(" + to_string(c) + ")");
    };
    push_constant(c0);
    size_t t = 0;
    while (t < w.vars.size()) {
        size_t run = t + 1;
        // runs extend across interior unit constants only
        while (run < w.vars.size() && w.vars[run] == w.vars[t] &&
               is_unit_element(w.constants[run]))
            ++run;
        int count = static_cast<int>(run - t);
        std::string f = var_name(w.vars[t]);
        if (count > 1) f += "^" + std::to_string(count);
        factors.push_back(std::move(f));
        push_constant(w.constants[run]);
        t = run;
    }
    if (factors.empty()) factors.push_back("1");
    for (size_t f = 0; f < factors.size(); ++f) {
        if (f) out << "*";
        out << factors[f];
    }
}

// Sign of a normalized word's leading scalar (first nonzero coordinate of
// the leading constant; normalization guarantees it is nonzero).
bool word_is_negative(const NcWord& w) {
    const Element& c = w.constants.front();
    for (int i = 0; i < c.dim(); ++i)
        if (!c[i].is_zero()) return c[i] < 0;
    return false;
}

}  // namespace

std::string to_string(const NcPoly& p) {
    NcPoly n = normalized(p);
    if (n.words.empty()) return "0";
    std::ostringstream out;
    for (size_t i = 0; i < n.words.size(); ++i) {
        bool negative = word_is_negative(n.words[i]);
        if (i == 0) {
            // A leading negative word keeps its sign inside the leading
            // rational factor so that the output stays inside the grammar.
            print_word(out, n.words[i], false);
        } else {
            out << (negative ? " - " : " + ");
            print_word(out, n.words[i], negative);
        }
    }
    return out.str();
}

std::string to_string_raw(const NcPoly& p) {
    if (p.words.empty()) return "0";
    std::ostringstream out;
    for (size_t i = 0; i < p.words.size(); ++i) {
        if (i) out << " + ";
        print_word(out, p.words[i], false);
    }
    return out.str();
}

}  // namespace ncq
