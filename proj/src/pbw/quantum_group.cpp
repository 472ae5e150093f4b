#include "uqs/pbw.hpp"

#include <algorithm>
#include <sstream>

namespace uqs {

namespace {

LaurentQ qi_number(int n, int d) {
    LaurentQ r;
    for (int k = 0; k < n; ++k) r += LaurentQ::q(d * (n - 1 - 2 * k));
    return r;
}

LaurentQ qi_factorial(int n, int d) {
    LaurentQ r(1);
    for (int k = 1; k <= n; ++k) r *= qi_number(k, d);
    return r;
}

Rational evaluate(const LaurentQ& x, const Rational& q0) {
    Rational v = 0;
    const auto& c = x.dense();
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * q0 + *it;
    Rational p = 1;
    int lo = x.low();
    for (int k = 0; k < std::abs(lo); ++k) p *= q0;
    if (x.is_zero()) return 0;
    return lo >= 0 ? Rational(v * p) : Rational(v / p);
}

std::optional<Rational> evaluate(const RationalQ& x, const Rational& q0) {
    Rational den = evaluate(x.den(), q0);
    if (den == 0) return std::nullopt;
    return Rational(evaluate(x.num(), q0) / den);
}

template <class K>
void add_term(std::map<K, RationalQ>& m, const K& k, const RationalQ& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

IntVec add_vec(const IntVec& a, const IntVec& b) {
    IntVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

// Product of word polynomials under concatenation.
WordPoly word_product(const WordPoly& x, const WordPoly& y) {
    WordPoly r;
    for (const auto& [u, a] : x)
        for (const auto& [v, b] : y) add_term(r, concat(u, v), a * b);
    return r;
}

bool window_ok(const IntVec& t, int a, int b) {
    for (int k = 0; k < static_cast<int>(t.size()); ++k)
        if (t[k] != 0 && (k <= a || k >= b)) return false;
    return true;
}

}  // namespace

int PbwMonomial::degree() const {
    int d = 0;
    for (int x : t) d += x;
    for (int x : r) d += x;
    return d;
}

std::string monomial_to_string(const PbwMonomial& mono) {
    std::ostringstream os;
    bool any = false;
    for (int k = static_cast<int>(mono.t.size()) - 1; k >= 0; --k)
        if (mono.t[k]) {
            os << (any ? " " : "") << "F" << k + 1 << (mono.t[k] > 1 ? "^" + std::to_string(mono.t[k]) : "");
            any = true;
        }
    for (size_t i = 0; i < mono.s.size(); ++i)
        if (mono.s[i]) {
            os << (any ? " " : "") << "L" << i + 1 << (mono.s[i] != 1 ? "^" + std::to_string(mono.s[i]) : "");
            any = true;
        }
    for (size_t k = 0; k < mono.r.size(); ++k)
        if (mono.r[k]) {
            os << (any ? " " : "") << "E" << k + 1 << (mono.r[k] > 1 ? "^" + std::to_string(mono.r[k]) : "");
            any = true;
        }
    return any ? os.str() : "1";
}

NormalOrdering with_source_word(const RootSystem& rs, const NormalOrdering& o) {
    if (o.source_word) return o;
    NormalOrdering r = o;
    r.source_word = word_from_ordering(rs, o.order);
    return r;
}

NormalOrdering reversed_ordering(const RootSystem& rs, const NormalOrdering& o) {
    IntVec rev(o.order.rbegin(), o.order.rend());
    NormalOrdering r;
    r.order = rev;
    r.source_word = word_from_ordering(rs, rev);
    return r;
}

QuantumGroup::QuantumGroup(const RootSystem& rs, NormalOrdering ordering)
    : rs_(rs), ord_(with_source_word(rs, ordering)) {
    word_ = *ord_.source_word;
    if (ordering_from_word(rs_, word_).order != ord_.order)
        throw InvalidArgument("source word does not produce the given ordering");
    build_root_vectors();
}

int QuantumGroup::position_of(const Root& r) const {
    int idx = rs_.index_of(r);
    if (idx < 0) throw InvalidArgument("not a positive root: " + root_to_string(r));
    for (int k = 0; k < num_positive(); ++k)
        if (ord_.order[k] == idx) return k;
    throw Defect("positive root missing from the ordering");
}

int QuantumGroup::root_d(int pos) const {
    const Root& b = root_at(pos);
    return static_cast<int>(rs_.form(b, b) / 2);
}

IntVec QuantumGroup::k_vector(int i) const {
    IntVec s(rank());
    for (int j = 0; j < rank(); ++j) s[j] = rs_.datum().a[j][i];
    return s;
}

long QuantumGroup::l_pairing(const IntVec& s, const Root& beta) const {
    long v = 0;
    for (int j = 0; j < rank(); ++j) v += static_cast<long>(s[j]) * rs_.datum().d[j] * beta[j];
    return v;
}

Root QuantumGroup::weight_of(const IntVec& exps) const {
    Root w(rank(), 0);
    for (int k = 0; k < static_cast<int>(exps.size()); ++k)
        if (exps[k])
            for (int j = 0; j < rank(); ++j) w[j] += exps[k] * root_at(k)[j];
    return w;
}

Root QuantumGroup::weight_of_word(const Word& w) const {
    Root r(rank(), 0);
    for (int i : w) ++r[i];
    return r;
}

TriPoly QuantumGroup::one() const { return {{TriKey{{}, IntVec(rank(), 0), {}}, RationalQ(1)}}; }
TriPoly QuantumGroup::x_plus(int i) const { return {{TriKey{{}, IntVec(rank(), 0), {i}}, RationalQ(1)}}; }
TriPoly QuantumGroup::x_minus(int i) const { return {{TriKey{{i}, IntVec(rank(), 0), {}}, RationalQ(1)}}; }
TriPoly QuantumGroup::l_monomial(const IntVec& s) const { return {{TriKey{{}, s, {}}, RationalQ(1)}}; }

const TriPoly& QuantumGroup::e_times_f(const Word& e, const Word& f) const {
    auto key = std::make_pair(e, f);
    {
        std::lock_guard lock(mu_);
        auto it = ef_cache_.find(key);
        if (it != ef_cache_.end()) return it->second;
    }
    IntVec zero(rank(), 0);
    TriPoly out;
    if (e.empty() || f.empty()) {
        out.emplace(TriKey{f, zero, e}, RationalQ(1));
    } else {
        int a = e.back();
        Word e0(e.begin(), e.end() - 1);
        int d = rs_.datum().d[a];
        RationalQ inv_den = (RationalQ::q(d) - RationalQ::q(-d)).inverse();
        IntVec ka = k_vector(a), ka_inv = ka;
        for (int& x : ka_inv) x = -x;
        TriPoly step;
        step.emplace(TriKey{f, zero, {a}}, RationalQ(1));
        for (size_t p = 0; p < f.size(); ++p) {
            if (f[p] != a) continue;
            long w = 0;
            for (size_t r = p + 1; r < f.size(); ++r) w += rs_.datum().b(a, f[r]);
            Word g = f;
            g.erase(g.begin() + static_cast<long>(p));
            add_term(step, TriKey{g, ka, {}}, RationalQ::q(static_cast<int>(-w)) * inv_den);
            add_term(step, TriKey{g, ka_inv, {}}, -(RationalQ::q(static_cast<int>(w)) * inv_den));
        }
        if (e0.empty())
            out = std::move(step);
        else
            out = multiply({{TriKey{{}, zero, e0}, RationalQ(1)}}, step);
    }
    std::lock_guard lock(mu_);
    return ef_cache_.emplace(key, std::move(out)).first->second;
}

TriPoly QuantumGroup::multiply(const TriPoly& x, const TriPoly& y) const {
    TriPoly out;
    for (const auto& [k1, c1] : x)
        for (const auto& [k2, c2] : y) {
            const TriPoly& mid = e_times_f(k1.e, k2.f);
            for (const auto& [km, cm] : mid) {
                long ex = -l_pairing(k1.s, weight_of_word(km.f)) - l_pairing(k2.s, weight_of_word(km.e));
                TriKey key{concat(k1.f, km.f), add_vec(add_vec(k1.s, km.s), k2.s), concat(km.e, k2.e)};
                add_term(out, key, c1 * c2 * cm * RationalQ::q(static_cast<int>(ex)));
            }
        }
    return out;
}

TriPoly QuantumGroup::braid_generator(int i, int j, bool plus) const {
    IntVec zero(rank(), 0);
    TriPoly out;
    if (i == j) {
        if (plus)
            out.emplace(TriKey{{i}, k_vector(i), {}}, RationalQ(-1));
        else {
            IntVec kinv = k_vector(i);
            for (int& x : kinv) x = -x;
            out.emplace(TriKey{{}, kinv, {i}}, RationalQ(-1));
        }
        return out;
    }
    int a = rs_.datum().a[i][j];
    int d = rs_.datum().d[i];
    for (int r = 0; r <= -a; ++r) {
        RationalQ c = RationalQ(LaurentQ::q(plus ? -d * r : d * r)) /
                      RationalQ(qi_factorial(-a - r, d) * qi_factorial(r, d));
        if ((r - a) % 2 != 0) c = -c;
        Word w;
        if (plus) {
            w.assign(-a - r, i);
            w.push_back(j);
            w.insert(w.end(), r, i);
            add_term(out, TriKey{{}, zero, w}, c);
        } else {
            w.assign(r, i);
            w.push_back(j);
            w.insert(w.end(), -a - r, i);
            add_term(out, TriKey{w, zero, {}}, c);
        }
    }
    return out;
}

TriPoly QuantumGroup::braid_apply(int i, const TriPoly& x) const {
    if (i < 0 || i >= rank()) throw InvalidArgument("simple index out of range");
    std::vector<TriPoly> plus_img(rank()), minus_img(rank());
    for (int j = 0; j < rank(); ++j) {
        plus_img[j] = braid_generator(i, j, true);
        minus_img[j] = braid_generator(i, j, false);
    }
    IntVec ki = k_vector(i);
    TriPoly out;
    for (const auto& [key, c] : x) {
        TriPoly acc = one();
        for (int letter : key.f) acc = multiply(acc, minus_img[letter]);
        IntVec s = key.s;
        for (int j = 0; j < rank(); ++j) s[j] -= key.s[i] * ki[j];
        acc = multiply(acc, l_monomial(s));
        for (int letter : key.e) acc = multiply(acc, plus_img[letter]);
        for (const auto& [k2, c2] : acc) add_term(out, k2, c * c2);
    }
    return out;
}

void QuantumGroup::build_root_vectors() {
    int D = num_positive();
    minus_words_.resize(D);
    plus_words_.resize(D);
    IntVec zero(rank(), 0);
    for (int k = 0; k < D; ++k) {
        for (bool plus : {true, false}) {
            TriPoly x = plus ? x_plus(word_[k]) : x_minus(word_[k]);
            for (int j = k - 1; j >= 0; --j) {
                TriPoly y = braid_apply(word_[j], x);
                x.clear();
                for (const auto& [key, c] : y)
                    if (key.s == zero && (plus ? key.f.empty() : key.e.empty())) x.emplace(key, c);
            }
            WordPoly wp;
            for (const auto& [key, c] : x) {
                const Word& w = plus ? key.e : key.f;
                if (weight_of_word(w) != root_at(k))
                    throw Defect("root vector for " + root_to_string(root_at(k)) + " is not homogeneous");
                add_term(wp, w, c);
            }
            if (wp.empty()) throw Defect("root vector for " + root_to_string(root_at(k)) + " vanishes");
            (plus ? plus_words_ : minus_words_)[k] = std::move(wp);
        }
    }
    minus_images_.resize(D);
    plus_images_.resize(D);
    for (int k = 0; k < D; ++k) {
        minus_images_[k] = shuffle_image(minus_words_[k]);
        plus_images_[k] = shuffle_image(plus_words_[k]);
        if (minus_images_[k].empty() || plus_images_[k].empty())
            throw Defect("root vector has zero shuffle image");
    }
}

const WordPoly& QuantumGroup::root_vector_word(int pos, bool plus) const {
    return plus ? plus_words_.at(pos) : minus_words_.at(pos);
}

TriPoly QuantumGroup::root_vector(int pos, bool plus) const {
    IntVec zero(rank(), 0);
    TriPoly out;
    for (const auto& [w, c] : root_vector_word(pos, plus))
        out.emplace(plus ? TriKey{{}, zero, w} : TriKey{w, zero, {}}, c);
    return out;
}

ShuffleVec QuantumGroup::shuffle_product(const ShuffleVec& x, const ShuffleVec& y) const {
    ShuffleVec out;
    for (const auto& [u, a] : x)
        for (const auto& [v, b] : y) {
            // suffix_form[i][y] = (weight of u[i..], alpha_y)
            std::vector<std::vector<long>> suffix(u.size() + 1, std::vector<long>(rank(), 0));
            for (int i = static_cast<int>(u.size()) - 1; i >= 0; --i)
                for (int j = 0; j < rank(); ++j) suffix[i][j] = suffix[i + 1][j] + rs_.datum().b(u[i], j);
            RationalQ ab = a * b;
            Word cur;
            cur.reserve(u.size() + v.size());
            auto rec = [&](auto&& self, size_t i, size_t j, long ex) -> void {
                if (i == u.size() && j == v.size()) {
                    add_term(out, cur, ab * RationalQ::q(static_cast<int>(ex)));
                    return;
                }
                if (i < u.size()) {
                    cur.push_back(u[i]);
                    self(self, i + 1, j, ex);
                    cur.pop_back();
                }
                if (j < v.size()) {
                    cur.push_back(v[j]);
                    self(self, i, j + 1, ex - suffix[i][v[j]]);
                    cur.pop_back();
                }
            };
            rec(rec, 0, 0, 0);
        }
    return out;
}

const ShuffleVec& QuantumGroup::word_image(const Word& w) const {
    {
        std::lock_guard lock(mu_);
        auto it = word_images_.find(w);
        if (it != word_images_.end()) return it->second;
    }
    ShuffleVec out;
    if (w.empty())
        out.emplace(Word{}, RationalQ(1));
    else {
        Word prefix(w.begin(), w.end() - 1);
        out = shuffle_product(word_image(prefix), ShuffleVec{{Word{w.back()}, RationalQ(1)}});
    }
    std::lock_guard lock(mu_);
    return word_images_.emplace(w, std::move(out)).first->second;
}

ShuffleVec QuantumGroup::shuffle_image(const WordPoly& p) const {
    ShuffleVec out;
    for (const auto& [w, c] : p)
        for (const auto& [u, a] : word_image(w)) add_term(out, u, c * a);
    return out;
}

std::vector<IntVec> QuantumGroup::partitions(const Root& nu) const {
    int D = num_positive();
    std::vector<IntVec> out;
    IntVec t(D, 0);
    auto rec = [&](auto&& self, int k, Root rest) -> void {
        if (k == D) {
            if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) out.push_back(t);
            return;
        }
        const Root& b = root_at(k);
        while (true) {
            self(self, k + 1, rest);
            bool fits = true;
            for (int j = 0; j < rank(); ++j)
                if (rest[j] < b[j]) fits = false;
            if (!fits) break;
            for (int j = 0; j < rank(); ++j) rest[j] -= b[j];
            ++t[k];
        }
        t[k] = 0;
    };
    rec(rec, 0, nu);
    std::sort(out.begin(), out.end());
    return out;
}

const QuantumGroup::Solver& QuantumGroup::solver(const Root& nu, bool plus) const {
    auto key = std::make_pair(nu, plus);
    {
        std::lock_guard lock(mu_);
        auto it = solvers_.find(key);
        if (it != solvers_.end()) return *it->second;
    }
    auto sol = std::make_shared<Solver>();
    sol->monomials = partitions(nu);
    int n = static_cast<int>(sol->monomials.size());
    int D = num_positive();
    const auto& images = plus ? plus_images_ : minus_images_;
    std::map<Word, int> row_index;
    std::vector<Word> words;
    for (const auto& t : sol->monomials) {
        ShuffleVec img{{Word{}, RationalQ(1)}};
        for (int s = 0; s < D; ++s) {
            int k = plus ? s : D - 1 - s;
            for (int e = 0; e < t[k]; ++e) img = shuffle_product(img, images[k]);
        }
        for (const auto& [w, c] : img)
            if (row_index.emplace(w, static_cast<int>(words.size())).second) words.push_back(w);
        sol->images.push_back(std::move(img));
    }
    // Pivot rows are selected by elimination at a rational sample point.
    std::vector<int> chosen;
    for (Rational q0 : {Rational(3, 2), Rational(5, 7), Rational(2), Rational(11, 3), Rational(-4, 5)}) {
        chosen.clear();
        std::vector<std::vector<Rational>> basis;  // echelon rows with pivot columns
        std::vector<int> pivots;
        bool bad_point = false;
        for (size_t w = 0; w < words.size() && static_cast<int>(chosen.size()) < n; ++w) {
            std::vector<Rational> row(n);
            for (int j = 0; j < n && !bad_point; ++j) {
                auto it = sol->images[j].find(words[w]);
                if (it == sol->images[j].end()) continue;
                auto v = evaluate(it->second, q0);
                if (!v) bad_point = true;
                else row[j] = *v;
            }
            if (bad_point) break;
            for (size_t b = 0; b < basis.size(); ++b)
                if (row[pivots[b]] != 0) {
                    Rational f = row[pivots[b]];
                    for (int j = 0; j < n; ++j) row[j] -= f * basis[b][j];
                }
            int p = -1;
            for (int j = 0; j < n; ++j)
                if (row[j] != 0) {
                    p = j;
                    break;
                }
            if (p < 0) continue;
            Rational inv = 1 / row[p];
            for (auto& x : row) x *= inv;
            for (size_t b = 0; b < basis.size(); ++b)
                if (basis[b][p] != 0) {
                    Rational f = basis[b][p];
                    for (int j = 0; j < n; ++j) basis[b][j] -= f * row[j];
                }
            basis.push_back(std::move(row));
            pivots.push_back(p);
            chosen.push_back(static_cast<int>(w));
        }
        if (!bad_point && static_cast<int>(chosen.size()) == n) break;
        chosen.clear();
    }
    if (static_cast<int>(chosen.size()) != n)
        throw Defect("PBW monomials of weight " + root_to_string(nu) + " are not independent in the shuffle algebra");
    Matrix<RationalQ> m(n, n);
    for (int r = 0; r < n; ++r) {
        sol->rows.push_back(words[chosen[r]]);
        for (int j = 0; j < n; ++j) {
            auto it = sol->images[j].find(words[chosen[r]]);
            if (it != sol->images[j].end()) m(r, j) = it->second;
        }
    }
    auto inv = inverse(m);
    if (!inv) throw Defect("singular PBW coordinate matrix at weight " + root_to_string(nu));
    sol->inverse = std::move(*inv);
    std::lock_guard lock(mu_);
    return *solvers_.emplace(key, std::move(sol)).first->second;
}

std::map<IntVec, RationalQ> QuantumGroup::pbw_coordinates(const ShuffleVec& v, bool plus) const {
    std::map<Root, ShuffleVec> by_weight;
    for (const auto& [w, c] : v) by_weight[weight_of_word(w)].emplace(w, c);
    std::map<IntVec, RationalQ> out;
    for (const auto& [nu, part] : by_weight) {
        const Solver& sol = solver(nu, plus);
        int n = static_cast<int>(sol.monomials.size());
        std::vector<RationalQ> rhs(n);
        for (int r = 0; r < n; ++r) {
            auto it = part.find(sol.rows[r]);
            if (it != part.end()) rhs[r] = it->second;
        }
        std::vector<RationalQ> x = sol.inverse.apply(rhs);
        ShuffleVec check = part;
        for (int j = 0; j < n; ++j) {
            if (x[j].is_zero()) continue;
            for (const auto& [w, c] : sol.images[j]) add_term(check, w, -(x[j] * c));
            add_term(out, sol.monomials[j], x[j]);
        }
        if (!check.empty())
            throw Defect("shuffle vector of weight " + root_to_string(nu) + " is not in the image of U_q(n)");
    }
    return out;
}

GenericElement QuantumGroup::to_pbw(const TriPoly& x) const {
    std::map<std::pair<IntVec, Word>, WordPoly> by_se;
    for (const auto& [k, c] : x) add_term(by_se[{k.s, k.e}], k.f, c);
    std::map<std::pair<IntVec, IntVec>, WordPoly> by_ts;
    for (const auto& [se, fpoly] : by_se) {
        auto coords = pbw_coordinates(shuffle_image(fpoly), false);
        for (const auto& [t, c] : coords) add_term(by_ts[{t, se.first}], se.second, c);
    }
    GenericElement out;
    for (const auto& [ts, epoly] : by_ts) {
        auto coords = pbw_coordinates(shuffle_image(epoly), true);
        for (const auto& [r, c] : coords) out.add(PbwMonomial{ts.first, ts.second, r}, c);
    }
    return out;
}

TriPoly QuantumGroup::from_pbw(const GenericElement& x) const {
    int D = num_positive();
    TriPoly out;
    for (const auto& [mono, c] : x.terms) {
        WordPoly fp{{Word{}, RationalQ(1)}}, ep{{Word{}, RationalQ(1)}};
        for (int k = D - 1; k >= 0; --k)
            for (int e = 0; e < mono.t[k]; ++e) fp = word_product(fp, minus_words_[k]);
        for (int k = 0; k < D; ++k)
            for (int e = 0; e < mono.r[k]; ++e) ep = word_product(ep, plus_words_[k]);
        for (const auto& [f, a] : fp)
            for (const auto& [e, b] : ep) add_term(out, TriKey{f, mono.s, e}, c * a * b);
    }
    return out;
}

const std::map<IntVec, RationalQ>& QuantumGroup::minus_product(int a, int b) const {
    if (a >= b) throw InvalidArgument("minus_product expects positions a < b");
    {
        std::lock_guard lock(mu_);
        auto it = minus_table_.find({a, b});
        if (it != minus_table_.end()) return it->second;
    }
    auto coords = pbw_coordinates(shuffle_product(minus_images_[a], minus_images_[b]), false);
    IntVec lead(num_positive(), 0);
    lead[a] = lead[b] = 1;
    RationalQ expect = RationalQ::q(static_cast<int>(rs_.form(root_at(a), root_at(b))));
    for (const auto& [t, c] : coords) {
        if (t == lead) {
            if (!(c == expect))
                throw Defect("leading commutation coefficient of X_" + std::to_string(a + 1) + " X_" +
                             std::to_string(b + 1) + " is " + c.to_string());
        } else if (!window_ok(t, a, b)) {
            throw Defect("commutation relation for positions " + std::to_string(a + 1) + ", " +
                         std::to_string(b + 1) + " leaves the window");
        }
    }
    if (!coords.count(lead)) throw Defect("missing leading term in commutation relation");
    std::lock_guard lock(mu_);
    return minus_table_.emplace(std::make_pair(a, b), std::move(coords)).first->second;
}

const std::map<IntVec, RationalQ>& QuantumGroup::plus_product(int a, int b) const {
    if (a >= b) throw InvalidArgument("plus_product expects positions a < b");
    {
        std::lock_guard lock(mu_);
        auto it = plus_table_.find({a, b});
        if (it != plus_table_.end()) return it->second;
    }
    auto coords = pbw_coordinates(shuffle_product(plus_images_[b], plus_images_[a]), true);
    IntVec lead(num_positive(), 0);
    lead[a] = lead[b] = 1;
    for (const auto& [t, c] : coords)
        if (t != lead && !window_ok(t, a, b))
            throw Defect("commutation relation for positions " + std::to_string(a + 1) + ", " +
                         std::to_string(b + 1) + " leaves the window");
    std::lock_guard lock(mu_);
    return plus_table_.emplace(std::make_pair(a, b), std::move(coords)).first->second;
}

const GenericElement& QuantumGroup::cross_commutator(int a, int b) const {
    {
        std::lock_guard lock(mu_);
        auto it = cross_table_.find({a, b});
        if (it != cross_table_.end()) return it->second;
    }
    TriPoly ef = multiply(root_vector(a, true), root_vector(b, false));
    TriPoly fe = multiply(root_vector(b, false), root_vector(a, true));
    for (const auto& [k, c] : fe) add_term(ef, k, -c);
    GenericElement out = to_pbw(ef);
    std::lock_guard lock(mu_);
    return cross_table_.emplace(std::make_pair(a, b), std::move(out)).first->second;
}

LsRelation QuantumGroup::ls_relation(int a, int b) const {
    LsRelation rel;
    rel.a = a;
    rel.b = b;
    rel.form = rs_.form(root_at(a), root_at(b));
    IntVec lead(num_positive(), 0);
    lead[a] = lead[b] = 1;
    for (const auto& [t, c] : minus_product(a, b)) {
        if (t == lead) continue;
        rel.plain.emplace(t, c);
        LaurentQ f(1);
        for (int k = 0; k < num_positive(); ++k) f *= qi_factorial(t[k], root_d(k));
        rel.divided.emplace(t, c * RationalQ(f));
    }
    return rel;
}

}  // namespace uqs
