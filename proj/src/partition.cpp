#include "jackcone/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "jackcone/error.hpp"

namespace jackcone {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw Error(ErrorCode::NotAPartition, "negative part in " + to_string(*this));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error(ErrorCode::NotAPartition, "parts not non-increasing in " + to_string(*this));
        degree_ += parts_[i];
    }
}

int Partition::column(int j) const noexcept {
    if (j < 1) return 0;
    int count = 0;
    for (int p : parts_) {
        if (p < j) break;
        ++count;
    }
    return count;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    const int width = part(1);
    c.reserve(static_cast<std::size_t>(width));
    for (int j = 1; j <= width; ++j) c.push_back(column(j));
    return Partition(std::move(c));
}

std::vector<int> Partition::padded(int size) const {
    std::vector<int> v = parts_;
    if (static_cast<int>(v.size()) < size) v.resize(static_cast<std::size_t>(size), 0);
    return v;
}

bool Partition::is_subset_of(const Partition& other) const noexcept {
    if (length() > other.length()) return false;
    for (int i = 1; i <= length(); ++i)
        if (part(i) > other.part(i)) return false;
    return true;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(degree_));
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
    return out;
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (int i = 1; i <= p.length(); ++i) {
        if (i > 1) s += ',';
        s += std::to_string(p.part(i));
    }
    return s + ")";
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        try {
            std::size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad partition part '" + token + "' in '" + text + "'");
        }
        token.clear();
    };
    for (char c : text) {
        if (c == '(' || c == ')' || c == '[' || c == ']') continue;
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            token += c;
        }
    }
    flush();
    return Partition(std::move(parts));
}

Partition column_partition(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1)); }

bool dominated_by(const Partition& lower, const Partition& upper) {
    if (lower.degree() != upper.degree()) return false;
    int a = 0, b = 0;
    const int n = std::max(lower.length(), upper.length());
    for (int i = 1; i <= n; ++i) {
        a += lower.part(i);
        b += upper.part(i);
        if (a > b) return false;
    }
    return true;
}

std::vector<Partition> enumerate_partitions(int degree, int max_length) {
    std::vector<Partition> out;
    if (degree < 0 || max_length < 0) return out;
    if (degree == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> current;
    // Depth-first with largest part first yields reverse lexicographic order.
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (static_cast<int>(current.size()) == max_length) return;
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(degree, degree);
    return out;
}

std::vector<Partition> enumerate_partitions_up_to(int max_degree, int max_length) {
    std::vector<Partition> out;
    for (int k = 0; k <= max_degree; ++k) {
        auto level = enumerate_partitions(k, max_length);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Partition contiguous(const Partition& sigma, int i) {
    if (i < 1 || i > sigma.length() + 1)
        throw Error(ErrorCode::NotAPartition,
                    "index " + std::to_string(i) + " out of range for " + to_string(sigma));
    if (i > 1 && sigma.part(i - 1) == sigma.part(i))
        throw Error(ErrorCode::NotAPartition,
                    "incrementing part " + std::to_string(i) + " of " + to_string(sigma) + " breaks monotonicity");
    std::vector<int> parts = sigma.padded(i);
    ++parts[static_cast<std::size_t>(i - 1)];
    return Partition(std::move(parts));
}

std::vector<int> contiguous_indices(const Partition& sigma) {
    std::vector<int> out;
    for (int i = 1; i <= sigma.length() + 1; ++i)
        if (i == 1 || sigma.part(i - 1) > sigma.part(i)) out.push_back(i);
    return out;
}

ArmLeg arm_leg(const Partition& sigma, Cell s) {
    if (!sigma.contains_cell(s))
        throw Error(ErrorCode::CellOutOfDiagram, "cell (" + std::to_string(s.row) + "," + std::to_string(s.col) +
                                                     ") not in " + to_string(sigma));
    return {sigma.part(s.row) - s.col, sigma.column(s.col) - s.row};
}

void require_positive_alpha(const Rational& alpha) {
    if (sgn(alpha) <= 0) throw Error(ErrorCode::NonPositiveAlpha, "alpha must be > 0, got " + to_string(alpha));
}

Hooks hooks(const Partition& sigma, Cell s, const Rational& alpha) {
    require_positive_alpha(alpha);
    const auto [arm, leg] = arm_leg(sigma, s);
    return {Rational(leg + alpha * (1 + arm)), Rational(leg + 1 + alpha * arm)};
}

Rational j_constant(const Partition& sigma, const Rational& alpha) {
    require_positive_alpha(alpha);
    Rational product = 1;
    for (const Cell& s : sigma.cells()) {
        auto h = hooks(sigma, s, alpha);
        product *= h.upper * h.lower;
    }
    return product;
}

}  // namespace jackcone
