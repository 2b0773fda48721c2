#include "schurlab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "schurlab/numeric.hpp"

namespace schurlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[i - 1];
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int row : parts_)
        for (int j = 0; j < row; ++j) conj[j]++;
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (parts_[i] < other.parts_[i]) return false;
    return true;
}

Partition Partition::union_with(const Partition& other) const {
    std::vector<int> out(std::max(length(), other.length()));
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = std::max(part(static_cast<int>(i) + 1), other.part(static_cast<int>(i) + 1));
    return Partition(std::move(out));
}

Partition Partition::componentwise_sum(const Partition& other) const {
    std::vector<int> out(std::max(length(), other.length()));
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = part(static_cast<int>(i) + 1) + other.part(static_cast<int>(i) + 1);
    return Partition(std::move(out));
}

bool Partition::is_rectangle() const {
    if (parts_.empty()) return false;
    return parts_.front() == parts_.back();
}

std::vector<Partition> Partition::rectangle_decomposition() const {
    if (parts_.empty())
        throw PreconditionError("rectangle_decomposition: no rectangles in the empty partition");
    std::vector<Partition> out;
    for (int i = 1; i <= length(); ++i) {
        if (part(i) > part(i + 1))
            out.push_back(Partition(std::vector<int>(i, part(i))));
    }
    return out;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    if (auto c = weight() <=> other.weight(); c != 0) return c;
    // Reverse lexicographic: greater first part comes earlier.
    int n = std::max(length(), other.length());
    for (int i = 1; i <= n; ++i) {
        if (auto c = other.part(i) <=> part(i); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

Partition Partition::parse(const std::string& text) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw ParseError("partition must start with '[': " + text);
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            bool neg = false;
            if (i < text.size() && text[i] == '-') { neg = true; ++i; }
            if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected integer in partition: " + text);
            long v = 0;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            parts.push_back(static_cast<int>(neg ? -v : v));
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ']') { ++i; break; }
            throw ParseError("expected ',' or ']' in partition: " + text);
        }
    }
    skip_ws();
    if (i != text.size()) throw ParseError("trailing characters after partition: " + text);
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + ": " + text);
    }
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& acc,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw PreconditionError("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate(n, n, acc, out);
    return out;
}

std::vector<Partition> superpartitions_of(const Partition& lambda, int n) {
    std::vector<Partition> out;
    if (n < lambda.weight()) return out;
    for (auto& pi : partitions_of(n))
        if (pi.contains(lambda)) out.push_back(pi);
    return out;
}

} // namespace schurlab
