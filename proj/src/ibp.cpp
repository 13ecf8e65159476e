#include "cmheat/ibp.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace cmheat {

int Partition::parts() const {
    int s = 0;
    for (int v : p) s += v;
    return s;
}

std::string Partition::str() const {
    std::string s = "(";
    for (int i = 0; i < target; ++i) {
        if (i) s += ",";
        s += std::to_string(i < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i)] : 0);
    }
    return s + ")";
}

std::vector<Partition> enumerate_partitions(int m) {
    if (m < 0) throw std::invalid_argument("enumerate_partitions: m < 0");
    std::vector<Partition> out;
    std::vector<int> p(static_cast<std::size_t>(std::max(m, 0)), 0);
    // Choose p_1 first (ascending), then p_2, ...: yields lexicographic order.
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (left == 0) {
            Partition part;
            part.target = m;
            part.p = p;
            while (!part.p.empty() && part.p.back() == 0) part.p.pop_back();
            out.push_back(std::move(part));
            return;
        }
        if (i > m) return;
        for (int c = 0; c * i <= left; ++c) {
            p[static_cast<std::size_t>(i - 1)] = c;
            rec(i + 1, left - c * i);
        }
        p[static_cast<std::size_t>(i - 1)] = 0;
    };
    rec(1, m);
    return out;
}

unsigned long long partition_count(int m) {
    if (m < 0) return 0;
    std::vector<unsigned long long> dp(static_cast<std::size_t>(m) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= m; ++part)
        for (int s = part; s <= m; ++s) dp[static_cast<std::size_t>(s)] += dp[static_cast<std::size_t>(s - part)];
    return dp[static_cast<std::size_t>(m)];
}

std::vector<Generator> generators(int n) {
    if (n < 1) throw std::invalid_argument("generators: n < 1");
    std::vector<Generator> out;
    for (auto& part : enumerate_partitions(2 * n - 1)) {
        XiPolyA seed(part.monomial(), AlphaPoly(1));
        out.push_back({part, dx(seed, AlphaPoly::alpha())});
    }
    return out;
}

std::vector<XiMonomial> weight_monomials(int m) {
    std::vector<XiMonomial> out;
    for (const auto& part : enumerate_partitions(m)) out.push_back(part.monomial());
    return out;
}

std::vector<XiMonomial> gram_basis(int n) {
    if (n < 1) throw std::invalid_argument("gram_basis: n < 1");
    auto v = weight_monomials(n);
    std::reverse(v.begin(), v.end());
    return v;
}

MonomialClasses classify_monomials(int n) {
    auto basis = gram_basis(n);
    std::set<XiMonomial> products;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) products.insert(basis[i] * basis[j]);
    MonomialClasses mc;
    for (auto& m : weight_monomials(2 * n)) (products.count(m) ? mc.representable : mc.must_vanish).push_back(m);
    return mc;
}

}  // namespace cmheat
