#include "advlin/partition.hpp"

#include "advlin/det.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace advlin::parts {

ColoredWord all_white(int k) { return ColoredWord(k, Color::white); }

ColoredWord parse_word(const std::string& s) {
    ColoredWord w;
    for (char c : s) {
        if (c == 'o' || c == 'w') w.push_back(Color::white);
        else if (c == 'b' || c == '*') w.push_back(Color::black);
        else throw DomainError("colored word characters are o/w (white) and b/* (black)");
    }
    return w;
}

SetPartition::SetPartition(std::vector<int> rgs) : block_of(std::move(rgs)) {
    int next = 0;
    for (int b : block_of) {
        if (b < 0 || b > next) throw DomainError("not a restricted growth string");
        if (b == next) ++next;
    }
}

int SetPartition::blocks() const {
    int m = 0;
    for (int b : block_of) m = std::max(m, b + 1);
    return m;
}

std::vector<std::vector<int>> SetPartition::block_list() const {
    std::vector<std::vector<int>> bl(blocks());
    for (int i = 0; i < k(); ++i) bl[block_of[i]].push_back(i);
    return bl;
}

std::string SetPartition::rgs_string() const {
    std::string s;
    for (int b : block_of) {
        if (b < 9) s += static_cast<char>('1' + b);
        else s += "(" + std::to_string(b + 1) + ")";
    }
    return s;
}

SetPartition SetPartition::parse_rgs(const std::string& s) {
    std::vector<int> rgs;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '1' && c <= '9') rgs.push_back(c - '1');
        else if (c == '(') {
            std::size_t close = s.find(')', i);
            if (close == std::string::npos) throw DomainError("unbalanced block id");
            rgs.push_back(std::stoi(s.substr(i + 1, close - i - 1)) - 1);
            i = close;
        } else throw DomainError("bad partition encoding");
    }
    return SetPartition(std::move(rgs));
}

SetPartition SetPartition::singletons(int k) {
    std::vector<int> rgs(k);
    std::iota(rgs.begin(), rgs.end(), 0);
    return SetPartition(std::move(rgs));
}

SetPartition SetPartition::one_block(int k) { return SetPartition(std::vector<int>(k, 0)); }

SetPartition SetPartition::from_blocks(int k, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> owner(k, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b]) {
            if (v < 0 || v >= k || owner[v] >= 0) throw DomainError("bad block list");
            owner[v] = static_cast<int>(b);
        }
    for (int v : owner)
        if (v < 0) throw DomainError("block list misses a point");
    // Renumber by first appearance.
    std::vector<int> remap(blocks.size(), -1);
    std::vector<int> rgs(k);
    int next = 0;
    for (int i = 0; i < k; ++i) {
        if (remap[owner[i]] < 0) remap[owner[i]] = next++;
        rgs[i] = remap[owner[i]];
    }
    return SetPartition(std::move(rgs));
}

bool leq(const SetPartition& a, const SetPartition& b) {
    if (a.k() != b.k()) throw DomainError("partition size mismatch");
    // a <= b iff points sharing an a-block share a b-block.
    std::map<int, int> seen;
    for (int i = 0; i < a.k(); ++i) {
        auto [it, fresh] = seen.emplace(a.block_of[i], b.block_of[i]);
        if (!fresh && it->second != b.block_of[i]) return false;
    }
    return true;
}

namespace {

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

SetPartition from_uf(UF& uf, int k) {
    std::vector<int> remap(k, -1), rgs(k);
    int next = 0;
    for (int i = 0; i < k; ++i) {
        int r = uf.find(i);
        if (remap[r] < 0) remap[r] = next++;
        rgs[i] = remap[r];
    }
    return SetPartition(std::move(rgs));
}

}  // namespace

SetPartition join(const SetPartition& a, const SetPartition& b) {
    if (a.k() != b.k()) throw DomainError("partition size mismatch");
    const int k = a.k();
    UF uf(k);
    std::map<int, int> first_a, first_b;
    for (int i = 0; i < k; ++i) {
        auto [ia, fa] = first_a.emplace(a.block_of[i], i);
        if (!fa) uf.unite(i, ia->second);
        auto [ib, fb] = first_b.emplace(b.block_of[i], i);
        if (!fb) uf.unite(i, ib->second);
    }
    return from_uf(uf, k);
}

bool noncrossing(const SetPartition& p) {
    const int k = p.k();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                for (int d = c + 1; d < k; ++d)
                    if (p.block_of[a] == p.block_of[c] && p.block_of[b] == p.block_of[d] &&
                        p.block_of[a] != p.block_of[b])
                        return false;
    return true;
}

namespace {

// Elements of the interval [a, b]: independent partitions of a's blocks
// within each block of b.
std::vector<SetPartition> interval(const SetPartition& a, const SetPartition& b) {
    const int k = a.k();
    // Group a's blocks by their containing b-block.
    int ab = a.blocks();
    std::vector<int> holder(ab, -1);
    for (int i = 0; i < k; ++i) holder[a.block_of[i]] = b.block_of[i];
    std::vector<std::vector<int>> groups(b.blocks());
    for (int blk = 0; blk < ab; ++blk) groups[holder[blk]].push_back(blk);

    // All set partitions of each group, by restricted growth strings.
    auto partitions_of = [](int m) {
        std::vector<std::vector<int>> all;
        std::vector<int> rgs(m, 0);
        if (m == 0) {
            all.push_back({});
            return all;
        }
        while (true) {
            all.push_back(rgs);
            int i = m - 1;
            while (i > 0) {
                int cap = 0;
                for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
                if (rgs[i] <= cap) break;
                --i;
            }
            if (i == 0) break;
            ++rgs[i];
            for (int j = i + 1; j < m; ++j) rgs[j] = 0;
        }
        return all;
    };

    std::vector<std::vector<std::vector<int>>> choices;
    for (const auto& g : groups) choices.push_back(partitions_of(static_cast<int>(g.size())));

    std::vector<SetPartition> out;
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
        // Assemble tau: glue a's blocks, then merge them according to the picks.
        UF uf(k);
        std::vector<int> rep(ab, -1);
        for (int i = 0; i < k; ++i) {
            if (rep[a.block_of[i]] < 0) rep[a.block_of[i]] = i;
            else uf.unite(i, rep[a.block_of[i]]);
        }
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            const auto& g = groups[gi];
            const auto& rgs = choices[gi][pick[gi]];
            std::map<int, int> first;
            for (std::size_t t = 0; t < g.size(); ++t) {
                auto [it, fresh] = first.emplace(rgs[t], rep[g[t]]);
                if (!fresh) uf.unite(rep[g[t]], it->second);
            }
        }
        out.push_back(from_uf(uf, k));
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return out;
}

}  // namespace

long mobius(const SetPartition& a, const SetPartition& b) {
    if (a.k() != b.k()) throw DomainError("partition size mismatch");
    if (!leq(a, b)) return 0;
    if (a == b) return 1;
    auto elems = interval(a, b);
    // Recurrence over the interval, finest elements first.
    std::sort(elems.begin(), elems.end(), [](const SetPartition& x, const SetPartition& y) {
        if (x.blocks() != y.blocks()) return x.blocks() > y.blocks();
        return x.block_of < y.block_of;
    });
    std::map<std::vector<int>, long> mu;
    for (const auto& tau : elems) {
        if (tau == a) {
            mu[tau.block_of] = 1;
            continue;
        }
        long s = 0;
        for (const auto& [rgs, val] : mu) {
            SetPartition t2{std::vector<int>(rgs)};
            if (leq(t2, tau) && !(t2 == tau)) s += val;
        }
        mu[tau.block_of] = -s;
    }
    return mu[b.block_of];
}

bool in_category(const SetPartition& p, const ColoredWord& word, const Category& cat) {
    if (static_cast<int>(word.size()) != p.k()) throw DomainError("word/partition size mismatch");
    auto blocks = p.block_list();
    auto block_sizes_are = [&](int size) {
        for (const auto& b : blocks)
            if (static_cast<int>(b.size()) != size) return false;
        return true;
    };
    auto color_balanced = [&](int mod) {
        for (const auto& b : blocks) {
            long d = 0;
            for (int v : b) d += (word[v] == Color::white) ? 1 : -1;
            if (mod == 0) {
                if (d != 0) return false;
            } else if (((d % mod) + mod) % mod != 0) return false;
        }
        return true;
    };
    switch (cat.tag) {
        case CategoryTag::P:
            return true;
        case CategoryTag::P_even:
            for (const auto& b : blocks)
                if (b.size() % 2 != 0) return false;
            return true;
        case CategoryTag::P2:
            return block_sizes_are(2);
        case CategoryTag::MatchingP2:
            return block_sizes_are(2) && color_balanced(0);
        case CategoryTag::NC:
            return noncrossing(p);
        case CategoryTag::NC2:
            return block_sizes_are(2) && noncrossing(p);
        case CategoryTag::MatchingNC2:
            return block_sizes_are(2) && color_balanced(0) && noncrossing(p);
        case CategoryTag::P_s:
            return color_balanced(cat.s);
    }
    throw DomainError("unknown category");
}

Category category_from_name(const std::string& name) {
    if (name == "P") return Category::P();
    if (name == "Peven" || name == "P_even") return Category::P_even();
    if (name == "P2") return Category::P2();
    if (name == "mP2" || name == "MatchingP2") return Category::MatchingP2();
    if (name == "NC") return Category::NC();
    if (name == "NC2") return Category::NC2();
    if (name == "mNC2" || name == "MatchingNC2") return Category::MatchingNC2();
    if (name.rfind("Ps", 0) == 0 && name.size() > 2) return Category::P_s(std::stoi(name.substr(2)));
    throw DomainError("unknown category name: " + name);
}

namespace {

bool is_pairing_category(const Category& cat) {
    return cat.tag == CategoryTag::P2 || cat.tag == CategoryTag::MatchingP2 ||
           cat.tag == CategoryTag::NC2 || cat.tag == CategoryTag::MatchingNC2;
}

void enumerate_pairings(std::vector<int>& assign, int next_block,
                        const ColoredWord& word, const Category& cat,
                        std::vector<SetPartition>& out) {
    const int k = static_cast<int>(assign.size());
    int first = -1;
    for (int i = 0; i < k; ++i)
        if (assign[i] < 0) {
            first = i;
            break;
        }
    if (first < 0) {
        SetPartition p{std::vector<int>(assign)};
        if (in_category(p, word, cat)) out.push_back(std::move(p));
        return;
    }
    for (int j = first + 1; j < k; ++j) {
        if (assign[j] >= 0) continue;
        assign[first] = next_block;
        assign[j] = next_block;
        enumerate_pairings(assign, next_block + 1, word, cat, out);
        assign[first] = -1;
        assign[j] = -1;
    }
}

void sort_canonical(std::vector<SetPartition>& parts) {
    std::sort(parts.begin(), parts.end(), [](const SetPartition& a, const SetPartition& b) {
        if (a.blocks() != b.blocks()) return a.blocks() > b.blocks();
        return a.block_of < b.block_of;
    });
}

}  // namespace

std::vector<SetPartition> enumerate(const ColoredWord& word, const Category& cat) {
    const int k = static_cast<int>(word.size());
    std::vector<SetPartition> out;
    if (k == 0) {
        out.push_back(SetPartition{});
        return out;
    }
    if (is_pairing_category(cat)) {
        if (k > 16) throw BudgetError("pairing enumeration budget is k <= 16");
        if (k % 2 == 1) return out;
        std::vector<int> assign(k, -1);
        enumerate_pairings(assign, 0, word, cat, out);
        sort_canonical(out);
        return out;
    }
    if (k > 12) throw BudgetError("partition enumeration budget is k <= 12");
    std::vector<int> rgs(k, 0);
    while (true) {
        SetPartition p{std::vector<int>(rgs)};
        if (in_category(p, word, cat)) out.push_back(std::move(p));
        int i = k - 1;
        while (i > 0) {
            int cap = 0;
            for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
            if (rgs[i] <= cap) break;
            --i;
        }
        if (i == 0) break;
        ++rgs[i];
        for (int j = i + 1; j < k; ++j) rgs[j] = 0;
    }
    sort_canonical(out);
    return out;
}

std::vector<SetPartition> enumerate(int k, const Category& cat) {
    return enumerate(all_white(k), cat);
}

ZMat order_matrix(const std::vector<SetPartition>& parts) {
    const std::size_t m = parts.size();
    ZMat a(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a(i, j) = leq(parts[i], parts[j]) ? 1 : 0;
    return a;
}

ZMat mobius_matrix(const std::vector<SetPartition>& parts) {
    const std::size_t m = parts.size();
    ZMat a(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a(i, j) = mobius(parts[i], parts[j]);
    return a;
}

ZMat gram(const std::vector<SetPartition>& parts, long n) {
    const std::size_t m = parts.size();
    ZMat g(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            BigInt v = bigint_pow(BigInt(n), join(parts[i], parts[j]).blocks());
            g(i, j) = v;
            g(j, i) = v;
        }
    return g;
}

ZMat gram(int k, long n, const Category& cat) { return gram(enumerate(k, cat), n); }

QMat weingarten(const std::vector<SetPartition>& parts, long n) {
    ZMat g = gram(parts, n);
    if (det(g) == 0) throw RefusalError("singular Gram matrix: Weingarten refused (N too small)");
    return inverse_exact(to_qmat(g));
}

QMat weingarten(int k, long n, const Category& cat) { return weingarten(enumerate(k, cat), n); }

BigRat truncated_char_moment(const Category& cat, int k, long n, long s) {
    auto parts = enumerate(k, cat);
    if (parts.empty()) return 0;
    QMat w = weingarten(parts, n);
    QMat gs = to_qmat(gram(parts, s));
    return (w * gs).trace();
}

std::vector<BigInt> asymptotic_moment_coeffs(const Category& cat, int k) {
    std::vector<BigInt> coeff(static_cast<std::size_t>(k) + 1, BigInt(0));
    for (const auto& p : enumerate(k, cat)) coeff[p.blocks()] += 1;
    return coeff;
}

BigRat asymptotic_moment(const Category& cat, int k, const BigRat& t) {
    auto coeff = asymptotic_moment_coeffs(cat, k);
    BigRat acc = 0, tp = 1;
    for (std::size_t b = 0; b < coeff.size(); ++b) {
        if (b > 0) tp *= t;
        acc += BigRat(coeff[b]) * tp;
    }
    return acc;
}

std::vector<BiPartition> enumerate_bipartitions(int in_count, int out_count) {
    auto parts = enumerate(in_count + out_count, Category::P());
    std::vector<BiPartition> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.push_back({in_count, out_count, std::move(p)});
    return out;
}

ZMat tpi_matrix(const BiPartition& p, int n) {
    if (n < 1) throw DomainError("tpi_matrix needs n >= 1");
    const int k = p.in_count, l = p.out_count;
    double budget = std::pow(static_cast<double>(n), k + l);
    if (budget > 5e7) throw BudgetError("tensor budget N^{k+l} exceeded");
    std::size_t rows = 1, cols = 1;
    for (int i = 0; i < l; ++i) rows *= n;
    for (int i = 0; i < k; ++i) cols *= n;
    ZMat t(rows, cols);
    std::vector<int> idx(k + l, 0);  // inputs first, then outputs
    auto fits = [&]() {
        for (int a = 0; a < k + l; ++a)
            for (int b = a + 1; b < k + l; ++b)
                if (p.part.block_of[a] == p.part.block_of[b] && idx[a] != idx[b]) return false;
        return true;
    };
    while (true) {
        if (fits()) {
            std::size_t col = 0, row = 0;
            for (int i = 0; i < k; ++i) col = col * n + idx[i];
            for (int i = 0; i < l; ++i) row = row * n + idx[k + i];
            t(row, col) = 1;
        }
        int i = k + l - 1;
        while (i >= 0 && idx[i] == n - 1) idx[i--] = 0;
        if (i < 0) break;
        ++idx[i];
    }
    return t;
}

BiPartition tensor(const BiPartition& a, const BiPartition& b) {
    const int k = a.in_count + b.in_count, l = a.out_count + b.out_count;
    std::vector<std::vector<int>> blocks;
    auto remap_a = [&](int pt) {
        return pt < a.in_count ? pt : k + (pt - a.in_count);
    };
    auto remap_b = [&](int pt) {
        return pt < b.in_count ? a.in_count + pt : k + a.out_count + (pt - b.in_count);
    };
    for (const auto& blk : a.part.block_list()) {
        std::vector<int> nb;
        for (int v : blk) nb.push_back(remap_a(v));
        blocks.push_back(std::move(nb));
    }
    for (const auto& blk : b.part.block_list()) {
        std::vector<int> nb;
        for (int v : blk) nb.push_back(remap_b(v));
        blocks.push_back(std::move(nb));
    }
    return {k, l, SetPartition::from_blocks(k + l, blocks)};
}

Composition compose(const BiPartition& pi, const BiPartition& sigma) {
    if (sigma.out_count != pi.in_count)
        throw DomainError("composition needs matching middle symbols");
    const int p = sigma.in_count, q = sigma.out_count, r = pi.out_count;
    // Global points: sigma inputs 0..p-1, middle p..p+q-1, pi outputs p+q..p+q+r-1.
    UF uf(p + q + r);
    {
        std::map<int, int> first;
        for (int pt = 0; pt < p + q; ++pt) {
            int g = pt;  // sigma's own ordering is inputs then outputs
            auto [it, fresh] = first.emplace(sigma.part.block_of[pt], g);
            if (!fresh) uf.unite(g, it->second);
        }
    }
    {
        std::map<int, int> first;
        for (int pt = 0; pt < q + r; ++pt) {
            int g = pt < q ? p + pt : p + q + (pt - q);
            auto [it, fresh] = first.emplace(pi.part.block_of[pt], g);
            if (!fresh) uf.unite(g, it->second);
        }
    }
    // Outer partition on p inputs + r outputs.
    std::vector<int> outer;
    for (int i = 0; i < p; ++i) outer.push_back(i);
    for (int i = 0; i < r; ++i) outer.push_back(p + q + i);
    std::map<int, int> remap;
    std::vector<int> rgs;
    int next = 0;
    for (int g : outer) {
        int root = uf.find(g);
        auto [it, fresh] = remap.emplace(root, next);
        if (fresh) ++next;
        rgs.push_back(it->second);
    }
    // Closed loops: classes made of middle points only.
    std::map<int, std::pair<bool, bool>> cls;  // root -> (has middle, has outer)
    for (int g = 0; g < p + q + r; ++g) {
        int root = uf.find(g);
        bool middle = (g >= p && g < p + q);
        auto& e = cls[root];
        if (middle) e.first = true;
        else e.second = true;
    }
    int loops = 0;
    for (const auto& [root, flags] : cls)
        if (flags.first && !flags.second) ++loops;
    return {{p, r, SetPartition(std::move(rgs))}, loops};
}

BiPartition adjoint_partition(const BiPartition& p) {
    const int k = p.in_count, l = p.out_count;
    std::vector<int> rgs(k + l);
    std::map<int, int> remap;
    int next = 0;
    for (int i = 0; i < k + l; ++i) {
        // New order: old outputs first, then old inputs.
        int old_pt = i < l ? k + i : i - l;
        int b = p.part.block_of[old_pt];
        auto [it, fresh] = remap.emplace(b, next);
        if (fresh) ++next;
        rgs[i] = it->second;
    }
    return {l, k, SetPartition(std::move(rgs))};
}

SetPartition fatten(const SetPartition& p) {
    if (!noncrossing(p)) throw DomainError("fatten needs a noncrossing partition");
    const int k = p.k();
    std::vector<std::vector<int>> pairs;
    for (const auto& blk : p.block_list()) {
        const int m = static_cast<int>(blk.size());
        for (int j = 0; j < m; ++j) {
            int cur = blk[j], nxt = blk[(j + 1) % m];
            // Right leg of cur pairs with left leg of the next element.
            pairs.push_back({2 * cur + 1, 2 * nxt});
        }
    }
    return SetPartition::from_blocks(2 * k, pairs);
}

SetPartition shrink(const SetPartition& pairing) {
    const int kk = pairing.k();
    if (kk % 2 != 0) throw DomainError("shrink needs an even ground set");
    const int k = kk / 2;
    for (const auto& blk : pairing.block_list())
        if (blk.size() != 2) throw DomainError("shrink needs a pairing");
    UF uf(k);
    for (const auto& blk : pairing.block_list()) uf.unite(blk[0] / 2, blk[1] / 2);
    return from_uf(uf, k);
}

BigInt catalan(int k) {
    if (k < 0) throw DomainError("catalan needs k >= 0");
    static std::vector<BigInt> cache{BigInt(1)};
    while (static_cast<int>(cache.size()) <= k) {
        const int m = static_cast<int>(cache.size()) - 1;  // computing C_{m+1}
        BigInt s = 0;
        for (int a = 0; a <= m; ++a) s += cache[a] * cache[m - a];
        cache.push_back(s);
    }
    // Closed form cross-check.
    BigInt closed = divexact(binomial(2UL * k, k), BigInt(k + 1));
    if (closed != cache[k]) throw DomainError("catalan recurrence/closed form mismatch");
    return cache[k];
}

}  // namespace advlin::parts
