#pragma once

#include "superq/gl_tensor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace superq {

// Integral highest weight (even | odd) of gl(m|1); even must be weakly decreasing.
struct Weight {
    int m = 0;
    std::vector<long> even;
    long odd = 0;
    auto operator<=>(const Weight&) const = default;
};

enum class Mark { cross, circle, vee };

struct WeightDiagram {
    int m = 0;
    std::map<long, Mark> labels;  // unlabelled positions are empty
    auto operator<=>(const WeightDiagram&) const = default;
};

inline Weight make_weight(std::vector<long> even, long odd) {
    int m = static_cast<int>(even.size());
    if (m < 2) throw std::invalid_argument("gl(m|1) needs m >= 2, got m = " + std::to_string(m));
    for (int i = 1; i < m; ++i)
        if (even[i] > even[i - 1]) throw std::invalid_argument("weight is not dominant for gl(m)");
    return Weight{m, std::move(even), odd};
}

inline WeightDiagram build_diagram(const Weight& w) {
    WeightDiagram d{w.m, {}};
    for (int i = 0; i < w.m; ++i) d.labels[w.even[i] - i] = Mark::cross;
    long circle = 1 - w.m - w.odd;
    auto it = d.labels.find(circle);
    if (it != d.labels.end()) it->second = Mark::vee;
    else d.labels[circle] = Mark::circle;
    return d;
}

inline int atypicality(const Weight& w) {
    for (int i = 0; i < w.m; ++i)
        if (w.even[i] - i == 1 - w.m - w.odd) return 1;
    return 0;
}

inline Weight weight_from_diagram(const WeightDiagram& d) {
    std::vector<long> xs;
    long circle = 0;
    int circles = 0;
    for (auto [pos, mark] : d.labels) {
        if (mark != Mark::circle) xs.push_back(pos);
        if (mark != Mark::cross) {
            circle = pos;
            ++circles;
        }
    }
    if (circles != 1 || static_cast<int>(xs.size()) != d.m)
        throw std::invalid_argument("diagram does not encode a gl(m|1) weight");
    std::sort(xs.rbegin(), xs.rend());
    std::vector<long> even(d.m);
    for (int i = 0; i < d.m; ++i) even[i] = xs[i] + i;
    return make_weight(even, 1 - d.m - circle);
}

// Weight of gl(m-1) read off the non-vee crosses; only meaningful for atypical weights.
inline RationalWeight core_weight(const Weight& w) {
    if (!atypicality(w)) throw std::invalid_argument("core_weight needs an atypical weight");
    auto d = build_diagram(w);
    std::vector<long> xs;
    for (auto it = d.labels.rbegin(); it != d.labels.rend(); ++it)
        if (it->second == Mark::cross) xs.push_back(it->first);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] += static_cast<long>(i);
    return RationalWeight{xs};
}

// Tensor with the k-th power of the Berezinian.
inline Weight berezin_twist(const Weight& w, long k) {
    Weight out = w;
    for (auto& x : out.even) x += k;
    out.odd -= k;
    return out;
}

inline std::string format_weight(const Weight& w) {
    std::string s = "(";
    for (int i = 0; i < w.m; ++i) s += (i ? "," : "") + std::to_string(w.even[i]);
    return s + "|" + std::to_string(w.odd) + ")";
}

// Two-line number-line drawing of the labelled window.
inline std::string render_diagram(const WeightDiagram& d) {
    if (d.labels.empty()) return "";
    long lo = d.labels.begin()->first - 1, hi = d.labels.rbegin()->first + 1;
    std::string marks, ticks;
    for (long p = lo; p <= hi; ++p) {
        auto it = d.labels.find(p);
        char c = '.';
        if (it != d.labels.end()) c = it->second == Mark::cross ? 'x' : it->second == Mark::circle ? 'o' : 'v';
        std::string num = std::to_string(p);
        std::string cell(num.size() + 1, ' ');
        cell[num.size() / 2] = c;
        marks += cell;
        ticks += num + " ";
    }
    return marks + "\n" + ticks + "\n";
}

}  // namespace superq
