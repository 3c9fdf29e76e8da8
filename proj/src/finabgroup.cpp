#include "latpair/finabgroup.hpp"

#include <algorithm>
#include <sstream>

namespace latpair {

FinAbGroup::FinAbGroup(std::vector<Int> invariant_factors) : d_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < d_.size(); ++i) {
        check_internal(d_[i] >= 2, "invariant factors must be >= 2");
        if (i > 0) check_internal(d_[i] % d_[i - 1] == 0, "invariant factors must form a divisibility chain");
    }
}

FinAbGroup FinAbGroup::from_cyclic_orders(const std::vector<Int>& orders) {
    std::vector<Int> w;
    for (const auto& n : orders) {
        check_internal(n >= 1, "cyclic order must be positive");
        if (n > 1) w.push_back(n);
    }
    // Pairwise gcd/lcm passes until the chain condition holds.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                if (w[j] % w[i] == 0 || w[i] % w[j] == 0) continue;
                Int g = gcd(w[i], w[j]);
                Int l = w[i] / g * w[j];
                w[i] = g;
                w[j] = l;
                changed = true;
            }
    }
    std::sort(w.begin(), w.end());
    while (!w.empty() && w.front() == 1) w.erase(w.begin());
    return FinAbGroup(std::move(w));
}

Int FinAbGroup::order() const {
    Int n = 1;
    for (const auto& d : d_) n *= d;
    return n;
}

Int FinAbGroup::torsion_count(const Int& e) const {
    check_input(e >= 1, "torsion needs e >= 1");
    Int n = 1;
    for (const auto& d : d_) n *= gcd(d, e);
    return n;
}

FinAbGroup FinAbGroup::mod_torsion(const Int& e) const {
    check_input(e >= 1, "mod_torsion needs e >= 1");
    std::vector<Int> out;
    for (const auto& d : d_) {
        Int q = d / gcd(d, e);
        if (q > 1) out.push_back(q);
    }
    return FinAbGroup(std::move(out));
}

std::string FinAbGroup::str() const {
    if (d_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < d_.size(); ++i) {
        if (i) os << " x ";
        os << "C" << d_[i].get_str();
    }
    return os.str();
}

} // namespace latpair
