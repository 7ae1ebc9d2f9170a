#include "sct/arcs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sct {

namespace {

void check_node_count(int n) {
    if (n < 0)
        throw std::invalid_argument("node count must be nonnegative");
}

void check_range(int n, const Arc& a) {
    if (a.left < 1 || a.left >= a.right || a.right > n)
        throw std::invalid_argument("arc " + std::to_string(a.left) + "-" +
                                    std::to_string(a.right) + " out of range for n=" +
                                    std::to_string(n));
}

void check_same_n(const ArcSet& a, const ArcSet& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("mismatched node counts: n=" + std::to_string(a.n()) +
                                    " vs n=" + std::to_string(b.n()));
}

std::vector<Arc> sorted_unique(std::vector<Arc> arcs) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return arcs;
}

bool endpoints_distinct(const std::vector<Arc>& arcs) {
    // arcs are sorted and unique
    for (size_t i = 0; i + 1 < arcs.size(); ++i)
        if (arcs[i].left == arcs[i + 1].left)
            return false;
    std::vector<int> rights;
    rights.reserve(arcs.size());
    for (const Arc& a : arcs)
        rights.push_back(a.right);
    std::sort(rights.begin(), rights.end());
    return std::adjacent_find(rights.begin(), rights.end()) == rights.end();
}

}  // namespace

ArcSet::ArcSet(int n) : n_(n) {
    check_node_count(n);
}

ArcSet::ArcSet(int n, std::vector<Arc> arcs) : n_(n) {
    check_node_count(n);
    for (const Arc& a : arcs)
        check_range(n, a);
    arcs_ = sorted_unique(std::move(arcs));
    if (!endpoints_distinct(arcs_))
        throw std::invalid_argument("arc set has a repeated left or right endpoint");
}

bool ArcSet::contains(const Arc& a) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), a);
}

std::string ArcSet::str() const {
    std::string out = "n=" + std::to_string(n_) + ":";
    for (size_t i = 0; i < arcs_.size(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(arcs_[i].left) + "-" + std::to_string(arcs_[i].right);
    }
    return out;
}

ArcSet ArcSet::parse(const std::string& text) {
    if (text.rfind("n=", 0) != 0)
        throw std::invalid_argument("ArcSet::parse: expected 'n=' prefix: " + text);
    size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("ArcSet::parse: missing ':': " + text);
    int n = 0;
    try {
        size_t used = 0;
        n = std::stoi(text.substr(2, colon - 2), &used);
        if (used != colon - 2)
            throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("ArcSet::parse: bad node count: " + text);
    }
    std::vector<Arc> arcs;
    size_t pos = colon + 1;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        std::string item = text.substr(pos, comma - pos);
        size_t dash = item.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 >= item.size())
            throw std::invalid_argument("ArcSet::parse: bad arc '" + item + "'");
        try {
            size_t ul = 0, ur = 0;
            int left = std::stoi(item.substr(0, dash), &ul);
            int right = std::stoi(item.substr(dash + 1), &ur);
            if (ul != dash || ur != item.size() - dash - 1)
                throw std::invalid_argument("");
            arcs.push_back({left, right});
        } catch (const std::exception&) {
            throw std::invalid_argument("ArcSet::parse: bad arc '" + item + "'");
        }
        if (comma < text.size() && comma + 1 == text.size())
            throw std::invalid_argument("ArcSet::parse: trailing ',': " + text);
        pos = comma + 1;
    }
    return ArcSet(n, std::move(arcs));
}

bool is_valid_arc_set(int n, const std::vector<Arc>& arcs) {
    check_node_count(n);
    for (const Arc& a : arcs)
        check_range(n, a);
    return endpoints_distinct(sorted_unique(arcs));
}

namespace {

void enumerate_rec(int n, int r, std::vector<bool>& left_used, std::vector<Arc>& cur,
                   const std::function<void(const std::vector<Arc>&)>& fn) {
    if (r > n) {
        fn(cur);
        return;
    }
    enumerate_rec(n, r + 1, left_used, cur, fn);  // no arc ends at r
    for (int i = 1; i < r; ++i) {
        if (left_used[i])
            continue;
        left_used[i] = true;
        cur.push_back({i, r});
        enumerate_rec(n, r + 1, left_used, cur, fn);
        cur.pop_back();
        left_used[i] = false;
    }
}

}  // namespace

void for_each_arc_set(int n, const std::function<void(const std::vector<Arc>&)>& fn) {
    check_node_count(n);
    std::vector<bool> left_used(n + 1, false);
    std::vector<Arc> cur;
    enumerate_rec(n, 2, left_used, cur, fn);
}

std::vector<ArcSet> enumerate_arc_sets(int n) {
    check_node_count(n);
    std::vector<ArcSet> out;
    for_each_arc_set(n, [&](const std::vector<Arc>& arcs) {
        out.emplace_back(n, arcs);
    });
    // Sort via precomputed keys; total_order_cmp would recompute dimv/rnode
    // on every comparison.
    struct Key {
        IntPartitionKey dv;
        IntPartitionKey rn;
        size_t index;
    };
    std::vector<Key> keys;
    keys.reserve(out.size());
    for (size_t i = 0; i < out.size(); ++i)
        keys.push_back({dimv(out[i]), rnode(out[i]), i});
    std::sort(keys.begin(), keys.end(), [&](const Key& a, const Key& b) {
        if (a.dv != b.dv)
            return a.dv < b.dv;
        if (a.rn != b.rn)
            return a.rn < b.rn;
        return out[a.index].arcs() < out[b.index].arcs();
    });
    std::vector<ArcSet> sorted;
    sorted.reserve(out.size());
    for (const Key& k : keys)
        sorted.push_back(std::move(out[k.index]));
    return sorted;
}

std::vector<std::vector<int>> parts(const ArcSet& lambda) {
    const int n = lambda.n();
    std::vector<int> next(n + 1, 0);
    std::vector<bool> is_right(n + 1, false);
    for (const Arc& a : lambda.arcs()) {
        next[a.left] = a.right;
        is_right[a.right] = true;
    }
    std::vector<std::vector<int>> blocks;
    for (int head = 1; head <= n; ++head) {
        if (is_right[head])
            continue;
        std::vector<int> block;
        for (int v = head; v != 0; v = next[v])
            block.push_back(v);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

int arc_count(const ArcSet& lambda) {
    return lambda.size();
}

int dim_stat(const ArcSet& lambda) {
    int d = 0;
    for (const Arc& a : lambda.arcs())
        d += a.right - a.left;
    return d;
}

IntPartitionKey dimv(const ArcSet& lambda) {
    IntPartitionKey spans;
    spans.reserve(lambda.size());
    for (const Arc& a : lambda.arcs())
        spans.push_back(a.right - a.left);
    std::sort(spans.rbegin(), spans.rend());
    return spans;
}

IntPartitionKey rnode(const ArcSet& lambda) {
    IntPartitionKey rights;
    rights.reserve(lambda.size());
    for (const Arc& a : lambda.arcs())
        rights.push_back(a.right);
    std::sort(rights.rbegin(), rights.rend());
    return rights;
}

int nst(const std::vector<Arc>& outer, const std::vector<Arc>& inner) {
    int count = 0;
    for (const Arc& o : outer)
        for (const Arc& i : inner)
            if (o.left < i.left && i.right < o.right)
                ++count;
    return count;
}

int nst(const ArcSet& outer, const ArcSet& inner) {
    check_same_n(outer, inner);
    return nst(outer.arcs(), inner.arcs());
}

std::vector<Arc> cflt(const ArcSet& lambda) {
    std::vector<Arc> out;
    for (const Arc& a : lambda.arcs()) {
        for (int k = a.left + 1; k < a.right; ++k) {
            out.push_back({a.left, k});
            out.push_back({k, a.right});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int snst(const ArcSet& outer, const ArcSet& inner) {
    check_same_n(outer, inner);
    std::vector<Arc> conflicts = cflt(outer);
    std::vector<Arc> reduced;
    std::set_difference(inner.arcs().begin(), inner.arcs().end(), conflicts.begin(),
                        conflicts.end(), std::back_inserter(reduced));
    return nst(outer.arcs(), reduced);
}

bool is_subset(const ArcSet& nu, const ArcSet& mu) {
    check_same_n(nu, mu);
    return std::includes(mu.arcs().begin(), mu.arcs().end(), nu.arcs().begin(),
                         nu.arcs().end());
}

std::strong_ordering total_order_cmp(const ArcSet& a, const ArcSet& b) {
    check_same_n(a, b);
    IntPartitionKey da = dimv(a), db = dimv(b);
    if (auto c = std::lexicographical_compare_three_way(da.begin(), da.end(), db.begin(),
                                                        db.end());
        c != std::strong_ordering::equal)
        return c;
    IntPartitionKey ra = rnode(a), rb = rnode(b);
    if (auto c = std::lexicographical_compare_three_way(ra.begin(), ra.end(), rb.begin(),
                                                        rb.end());
        c != std::strong_ordering::equal)
        return c;
    return std::lexicographical_compare_three_way(a.arcs().begin(), a.arcs().end(),
                                                  b.arcs().begin(), b.arcs().end());
}

}  // namespace sct
