#include "uqs/rootsys.hpp"

#include "uqs/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace uqs {

namespace {

IntMatrix zero_matrix(int n) { return IntMatrix(n, IntVec(n, 0)); }

void link(IntMatrix& a, int i, int j, int aij, int aji) {
    a[i][j] = aij;
    a[j][i] = aji;
}

}  // namespace

CartanDatum CartanDatum::from_type(const std::string& type) {
    if (type.size() < 2) throw InvalidArgument("Cartan type '" + type + "' must look like A2, B3, G2");
    char s = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
    int l = 0;
    try {
        l = std::stoi(type.substr(1));
    } catch (const std::exception&) {
        throw InvalidArgument("Cartan type '" + type + "' has no rank");
    }
    if (l < 1) throw InvalidArgument("Cartan type '" + type + "' has rank < 1");
    IntMatrix a = zero_matrix(l);
    for (int i = 0; i < l; ++i) a[i][i] = 2;
    switch (s) {
        case 'A':
            for (int i = 0; i + 1 < l; ++i) link(a, i, i + 1, -1, -1);
            break;
        case 'B':
            if (l < 2) throw InvalidArgument("type B needs rank >= 2");
            for (int i = 0; i + 2 < l; ++i) link(a, i, i + 1, -1, -1);
            link(a, l - 2, l - 1, -1, -2);
            break;
        case 'C':
            if (l < 2) throw InvalidArgument("type C needs rank >= 2");
            for (int i = 0; i + 2 < l; ++i) link(a, i, i + 1, -1, -1);
            link(a, l - 2, l - 1, -2, -1);
            break;
        case 'D':
            if (l < 4) throw InvalidArgument("type D needs rank >= 4");
            for (int i = 0; i + 2 < l; ++i) link(a, i, i + 1, -1, -1);
            link(a, l - 3, l - 1, -1, -1);
            break;
        case 'E':
            if (l < 6 || l > 8) throw InvalidArgument("type E needs rank 6, 7 or 8");
            link(a, 0, 2, -1, -1);
            link(a, 1, 3, -1, -1);
            for (int i = 2; i + 1 < l; ++i) link(a, i, i + 1, -1, -1);
            break;
        case 'F':
            if (l != 4) throw InvalidArgument("type F needs rank 4");
            link(a, 0, 1, -1, -1);
            link(a, 1, 2, -1, -2);
            link(a, 2, 3, -1, -1);
            break;
        case 'G':
            if (l != 2) throw InvalidArgument("type G needs rank 2");
            link(a, 0, 1, -1, -3);
            break;
        default:
            throw InvalidArgument("unknown Cartan series '" + std::string(1, s) + "'");
    }
    CartanDatum cd = from_matrix(a);
    cd.series = s;
    return cd;
}

CartanDatum CartanDatum::from_matrix(const IntMatrix& a) {
    CartanDatum cd;
    cd.series = 'X';
    cd.rank = static_cast<int>(a.size());
    cd.a = a;
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != cd.rank) throw InvalidArgument("Cartan matrix is not square");
    for (int i = 0; i < cd.rank; ++i) {
        if (a[i][i] != 2) throw InvalidArgument("Cartan matrix violates a_ii = 2 at i = " + std::to_string(i + 1));
        for (int j = 0; j < cd.rank; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0)
                throw InvalidArgument("Cartan matrix violates a_ij <= 0 at (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw InvalidArgument("Cartan matrix violates a_ij = 0 iff a_ji = 0 at (" + std::to_string(i + 1) +
                                      "," + std::to_string(j + 1) + ")");
        }
    }
    // Solve d_i a_ij = d_j a_ji along each connected component.
    std::vector<Rational> d(cd.rank, Rational(0));
    for (int start = 0; start < cd.rank; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::deque<int> q{start};
        std::vector<int> comp{start};
        while (!q.empty()) {
            int i = q.front();
            q.pop_front();
            for (int j = 0; j < cd.rank; ++j) {
                if (j == i || a[i][j] == 0) continue;
                Rational dj = d[i] * a[i][j] / a[j][i];
                if (d[j] == 0) {
                    d[j] = dj;
                    q.push_back(j);
                    comp.push_back(j);
                } else if (d[j] != dj) {
                    throw InvalidArgument("Cartan matrix is not symmetrizable at (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + ")");
                }
            }
        }
        mpz_class den = 1;
        for (int i : comp) den = lcm(den, mpz_class(d[i].get_den()));
        mpz_class g = 0;
        for (int i : comp) {
            d[i] *= den;
            g = gcd(g, mpz_class(d[i].get_num()));
        }
        for (int i : comp) d[i] /= g;
    }
    cd.d.resize(cd.rank);
    for (int i = 0; i < cd.rank; ++i) cd.d[i] = static_cast<int>(d[i].get_num().get_si());
    cd.validate();
    return cd;
}

void CartanDatum::validate() const {
    if (rank < 1 || static_cast<int>(a.size()) != rank || static_cast<int>(d.size()) != rank)
        throw InvalidArgument("Cartan datum has inconsistent sizes");
    int g = 0;
    for (int i = 0; i < rank; ++i) {
        if (d[i] <= 0) throw InvalidArgument("symmetrizer d_" + std::to_string(i + 1) + " is not positive");
        g = std::gcd(g, d[i]);
        if (a[i][i] != 2) throw InvalidArgument("Cartan matrix violates a_ii = 2");
        for (int j = 0; j < rank; ++j) {
            if (i != j && a[i][j] > 0) throw InvalidArgument("Cartan matrix violates a_ij <= 0");
            if ((a[i][j] == 0) != (a[j][i] == 0)) throw InvalidArgument("Cartan matrix violates a_ij = 0 iff a_ji = 0");
            if (b(i, j) != b(j, i)) throw InvalidArgument("d_i a_ij is not symmetric");
        }
    }
    if (g != 1) throw InvalidArgument("symmetrizers are not coprime");
}

std::string CartanDatum::name() const {
    if (series == 'X') return "custom" + std::to_string(rank);
    return std::string(1, series) + std::to_string(rank);
}

WeylElement WeylElement::identity(int rank) {
    WeylElement w;
    w.m_ = zero_matrix(rank);
    for (int i = 0; i < rank; ++i) w.m_[i][i] = 1;
    w.word_ = IntVec{};
    return w;
}

WeylElement WeylElement::from_matrix(IntMatrix m) {
    WeylElement w;
    w.m_ = std::move(m);
    return w;
}

WeylElement WeylElement::simple_reflection(const CartanDatum& cd, int i) {
    if (i < 0 || i >= cd.rank) throw InvalidArgument("simple reflection index out of range");
    WeylElement w = identity(cd.rank);
    // s_i(alpha_j) = alpha_j - a_ij alpha_i
    for (int j = 0; j < cd.rank; ++j) w.m_[i][j] -= cd.a[i][j];
    w.word_ = IntVec{i};
    return w;
}

WeylElement WeylElement::from_word(const CartanDatum& cd, const IntVec& word) {
    WeylElement w = identity(cd.rank);
    for (int i : word) w = w * simple_reflection(cd, i);
    w.word_ = word;
    return w;
}

Root WeylElement::apply(const Root& r) const {
    Root out(r.size(), 0);
    for (size_t i = 0; i < m_.size(); ++i)
        for (size_t j = 0; j < m_.size(); ++j) out[i] += m_[i][j] * r[j];
    return out;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    WeylElement w;
    int n = rank();
    w.m_ = zero_matrix(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (m_[i][k] != 0)
                for (int j = 0; j < n; ++j) w.m_[i][j] += m_[i][k] * o.m_[k][j];
    if (word_ && o.word_) {
        IntVec wd = *word_;
        wd.insert(wd.end(), o.word_->begin(), o.word_->end());
        w.word_ = wd;
    }
    return w;
}

bool WeylElement::is_identity() const {
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            if (m_[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

RootSystem::RootSystem(CartanDatum datum) : cd_(std::move(datum)) {
    cd_.validate();
    std::set<Root> seen;
    std::deque<Root> queue;
    for (int i = 0; i < cd_.rank; ++i) {
        Root r = simple_root(i);
        seen.insert(r);
        queue.push_back(r);
    }
    while (!queue.empty()) {
        Root r = queue.front();
        queue.pop_front();
        for (int i = 0; i < cd_.rank; ++i) {
            Root t = reflect(i, r);
            if (is_positive(t) && seen.insert(t).second) queue.push_back(t);
        }
        if (seen.size() > 100000) throw BudgetExceeded("root enumeration does not terminate: not of finite type");
    }
    pos_.assign(seen.begin(), seen.end());
    std::sort(pos_.begin(), pos_.end(), [this](const Root& x, const Root& y) {
        int hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return x > y;
    });
    for (size_t k = 0; k < pos_.size(); ++k) index_[pos_[k]] = static_cast<int>(k);
}

int RootSystem::index_of(const Root& r) const {
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Root& r) const {
    if (index_of(r) >= 0) return true;
    Root n = r;
    for (auto& x : n) x = -x;
    return index_of(n) >= 0;
}

bool RootSystem::is_positive(const Root& r) {
    bool any = false;
    for (int x : r) {
        if (x < 0) return false;
        if (x > 0) any = true;
    }
    return any;
}

Root RootSystem::simple_root(int i) const {
    Root r(cd_.rank, 0);
    r[i] = 1;
    return r;
}

int RootSystem::simple_index(const Root& r) const {
    int idx = -1;
    for (int i = 0; i < static_cast<int>(r.size()); ++i) {
        if (r[i] == 0) continue;
        if (r[i] != 1 || idx >= 0) return -1;
        idx = i;
    }
    return idx;
}

long RootSystem::form(const Root& x, const Root& y) const {
    long s = 0;
    for (int i = 0; i < cd_.rank; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < cd_.rank; ++j) s += static_cast<long>(x[i]) * y[j] * cd_.b(i, j);
    }
    return s;
}

long RootSystem::coroot_pairing(int i, const Root& x) const {
    long s = 0;
    for (int j = 0; j < cd_.rank; ++j) s += static_cast<long>(cd_.a[i][j]) * x[j];
    return s;
}

Root RootSystem::reflect(int i, const Root& x) const {
    Root r = x;
    r[i] -= static_cast<int>(coroot_pairing(i, x));
    return r;
}

WeylElement RootSystem::root_reflection(const Root& alpha) const {
    // s_alpha(x) = x - 2 (x, alpha)/(alpha, alpha) alpha
    long aa = form(alpha, alpha);
    IntMatrix m = WeylElement::identity(cd_.rank).matrix();
    for (int j = 0; j < cd_.rank; ++j) {
        long c = 2 * form(simple_root(j), alpha);
        if (c % aa != 0) throw Defect("non-integral root reflection");
        for (int i = 0; i < cd_.rank; ++i) m[i][j] -= static_cast<int>(c / aa) * alpha[i];
    }
    return WeylElement::from_word(cd_, reduced_word(WeylElement::from_matrix(m)));
}

int RootSystem::height(const Root& r) const { return std::accumulate(r.begin(), r.end(), 0); }

int RootSystem::length(const WeylElement& w) const {
    int n = 0;
    for (const auto& r : pos_)
        if (!is_positive(w.apply(r))) ++n;
    return n;
}

IntVec RootSystem::reduced_word(const WeylElement& w) const {
    IntVec word;
    WeylElement cur = w;
    while (!cur.is_identity()) {
        int pick = -1;
        for (int i = 0; i < cd_.rank; ++i)
            if (!is_positive(cur.apply(simple_root(i)))) {
                pick = i;
                break;
            }
        if (pick < 0) throw Defect("element with no descent is not the identity");
        word.insert(word.begin(), pick);
        cur = cur * WeylElement::simple_reflection(cd_, pick);
    }
    return word;
}

WeylElement RootSystem::inverse(const WeylElement& w) const {
    IntVec word = reduced_word(w);
    std::reverse(word.begin(), word.end());
    return WeylElement::from_word(cd_, word);
}

WeylElement RootSystem::longest_element() const {
    WeylElement w = WeylElement::identity(cd_.rank);
    while (true) {
        int pick = -1;
        for (int i = 0; i < cd_.rank; ++i)
            if (is_positive(w.apply(simple_root(i)))) {
                pick = i;
                break;
            }
        if (pick < 0) break;
        w = w * WeylElement::simple_reflection(cd_, pick);
    }
    return w;
}

std::vector<WeylElement> RootSystem::all_elements(size_t budget) const {
    std::set<WeylElement> seen;
    std::deque<WeylElement> queue;
    WeylElement e = WeylElement::identity(cd_.rank);
    seen.insert(e);
    queue.push_back(e);
    while (!queue.empty()) {
        WeylElement w = queue.front();
        queue.pop_front();
        for (int i = 0; i < cd_.rank; ++i) {
            WeylElement x = w * WeylElement::simple_reflection(cd_, i);
            if (seen.insert(x).second) {
                if (seen.size() > budget) throw BudgetExceeded("Weyl group larger than the element budget");
                queue.push_back(x);
            }
        }
    }
    std::vector<WeylElement> all(seen.begin(), seen.end());
    std::vector<std::pair<int, WeylElement>> keyed;
    for (auto& w : all) keyed.emplace_back(length(w), w);
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
    });
    std::vector<WeylElement> out;
    for (auto& [len, w] : keyed) {
        WeylElement x = WeylElement::from_word(cd_, reduced_word(w));
        out.push_back(x);
    }
    return out;
}

WeylElement RootSystem::parse_element(const std::string& text) const {
    std::istringstream is(text);
    std::string tok;
    IntVec word;
    while (is >> tok) {
        if (tok == "e" || tok == "1" || tok == "id") continue;
        if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
            throw InvalidArgument("Weyl word token '" + tok + "' is not of the form s<i>");
        int i = 0;
        try {
            i = std::stoi(tok.substr(1));
        } catch (const std::exception&) {
            throw InvalidArgument("Weyl word token '" + tok + "' has no index");
        }
        if (i < 1 || i > cd_.rank) throw InvalidArgument("Weyl word index " + std::to_string(i) + " out of range");
        word.push_back(i - 1);
    }
    return WeylElement::from_word(cd_, word);
}

bool is_normal(const RootSystem& rs, const IntVec& order) {
    int D = rs.num_positive();
    if (static_cast<int>(order.size()) != D) return false;
    IntVec pos(D, -1);
    for (int k = 0; k < D; ++k) {
        if (order[k] < 0 || order[k] >= D || pos[order[k]] >= 0) return false;
        pos[order[k]] = k;
    }
    for (int a = 0; a < D; ++a)
        for (int b = a + 1; b < D; ++b) {
            Root s = rs.positive_root(a);
            for (int i = 0; i < rs.rank(); ++i) s[i] += rs.positive_root(b)[i];
            int c = rs.index_of(s);
            if (c < 0) continue;
            int lo = std::min(pos[a], pos[b]), hi = std::max(pos[a], pos[b]);
            if (!(lo < pos[c] && pos[c] < hi)) return false;
        }
    return true;
}

NormalOrdering ordering_from_word(const RootSystem& rs, const IntVec& word) {
    int D = rs.num_positive();
    if (static_cast<int>(word.size()) != D)
        throw InvalidArgument("word of length " + std::to_string(word.size()) +
                              " cannot be a reduced word of the longest element (length " + std::to_string(D) + ")");
    NormalOrdering o;
    std::vector<bool> used(D, false);
    WeylElement prefix = WeylElement::identity(rs.rank());
    for (int k = 0; k < D; ++k) {
        int i = word[k];
        if (i < 0 || i >= rs.rank()) throw InvalidArgument("word letter out of range");
        Root beta = prefix.apply(rs.simple_root(i));
        int idx = rs.index_of(beta);
        if (idx < 0) throw InvalidArgument("word is not reduced: root " + root_to_string(beta) + " at position " +
                                           std::to_string(k + 1) + " is negative");
        if (used[idx]) throw InvalidArgument("word is not reduced: root " + root_to_string(beta) + " repeats");
        used[idx] = true;
        o.order.push_back(idx);
        prefix = prefix * WeylElement::simple_reflection(rs.datum(), i);
    }
    o.source_word = word;
    return o;
}

IntVec word_from_ordering(const RootSystem& rs, const IntVec& order) {
    if (!is_normal(rs, order)) throw InvalidArgument("ordering is not normal");
    IntVec word;
    WeylElement prefix_inv = WeylElement::identity(rs.rank());
    for (int idx : order) {
        Root v = prefix_inv.apply(rs.positive_root(idx));
        int i = rs.simple_index(v);
        if (i < 0) throw Defect("normal ordering does not come from a reduced word");
        word.push_back(i);
        prefix_inv = WeylElement::simple_reflection(rs.datum(), i) * prefix_inv;
    }
    return word;
}

std::vector<NormalOrdering> elementary_transpositions(const RootSystem& rs, const NormalOrdering& o) {
    std::vector<NormalOrdering> out;
    int D = o.size();
    int l = rs.rank();
    for (int p = 0; p < D; ++p) {
        for (int q = p + 1; q < D && q <= p + 5; ++q) {
            const Root& a = rs.positive_root(o.order[p]);
            const Root& b = rs.positive_root(o.order[q]);
            Root diff(l);
            for (int i = 0; i < l; ++i) diff[i] = a[i] - b[i];
            if (rs.is_root(diff)) continue;
            std::set<int> sub;
            for (int c1 = 0; c1 <= 3; ++c1)
                for (int c2 = 0; c2 <= 3; ++c2) {
                    if (c1 + c2 == 0) continue;
                    Root r(l);
                    for (int i = 0; i < l; ++i) r[i] = c1 * a[i] + c2 * b[i];
                    int idx = rs.index_of(r);
                    if (idx >= 0) sub.insert(idx);
                }
            if (static_cast<int>(sub.size()) != q - p + 1) continue;
            std::set<int> seg(o.order.begin() + p, o.order.begin() + q + 1);
            if (seg != sub) continue;
            NormalOrdering n;
            n.order = o.order;
            std::reverse(n.order.begin() + p, n.order.begin() + q + 1);
            n.source_word = word_from_ordering(rs, n.order);
            out.push_back(std::move(n));
        }
    }
    return out;
}

std::vector<NormalOrdering> all_normal_orderings(const RootSystem& rs, const NormalOrdering& start, size_t budget) {
    std::set<IntVec> seen{start.order};
    std::deque<NormalOrdering> queue{start};
    while (!queue.empty()) {
        NormalOrdering cur = queue.front();
        queue.pop_front();
        for (auto& n : elementary_transpositions(rs, cur)) {
            if (seen.insert(n.order).second) {
                if (seen.size() > budget) throw BudgetExceeded("normal ordering enumeration exceeded its budget");
                queue.push_back(std::move(n));
            }
        }
    }
    std::vector<NormalOrdering> out;
    for (const auto& ord : seen) {
        NormalOrdering n;
        n.order = ord;
        n.source_word = word_from_ordering(rs, ord);
        out.push_back(std::move(n));
    }
    return out;
}

std::string root_to_string(const Root& r) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ")";
    return os.str();
}

std::string word_to_string(const IntVec& word) {
    std::ostringstream os;
    for (size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << "s" << word[i] + 1;
    return os.str();
}

}  // namespace uqs
