#include "gyro/gyrogroup.hpp"

#include "axiom_analysis.hpp"

namespace gyro {

namespace {

std::string summarize(const ValidationReport& report)
{
    std::string msg = "table is not a gyrogroup:";
    for (const auto& v : report.violations) msg += " " + v.describe();
    return msg;
}

}  // namespace

InvalidGyrogroup::InvalidGyrogroup(ValidationReport report)
    : Error(summarize(report)), report_(std::move(report))
{
}

FiniteGyrogroup FiniteGyrogroup::construct(CayleyTable table, std::vector<std::string> labels,
                                           Execution exec)
{
    if (!labels.empty() && labels.size() != table.order()) {
        throw LengthMismatch("expected " + std::to_string(table.order()) + " labels, got " +
                             std::to_string(labels.size()));
    }
    auto analysis = detail::analyze(table, exec);
    if (!analysis.report.valid) throw InvalidGyrogroup(std::move(analysis.report));

    FiniteGyrogroup g;
    g.table_ = std::move(table);
    g.identity_ = analysis.identity;
    g.inverse_ = std::move(analysis.left_inverse);
    g.gyrations_ = std::move(analysis.gyrations);
    g.gyr_index_ = std::move(analysis.gyr_index);
    g.labels_ = std::move(labels);
    return g;
}

std::string FiniteGyrogroup::label(Element e) const
{
    if (e < labels_.size()) return labels_[e];
    return std::to_string(e);
}

Element FiniteGyrogroup::left_inverse(std::size_t a) const
{
    if (a >= order()) throw IndexOutOfRange("element " + std::to_string(a) + " out of range");
    return inverse_[a];
}

Permutation FiniteGyrogroup::gyration(std::size_t a, std::size_t b) const
{
    const auto n = order();
    if (a >= n || b >= n) throw IndexOutOfRange("gyration index out of range");
    std::vector<Element> images(n);
    const auto minus_ab = inverse_[op(a, b)];
    for (std::size_t c = 0; c < n; ++c) images[c] = op(minus_ab, op(a, op(b, c)));
    return Permutation(std::move(images));
}

bool FiniteGyrogroup::is_automorphism(const Permutation& p) const
{
    const auto n = order();
    if (p.size() != n) {
        throw LengthMismatch("permutation of length " + std::to_string(p.size()) +
                             " on a gyrogroup of order " + std::to_string(n));
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (p(op(x, y)) != op(p(x), p(y))) return false;
        }
    }
    return true;
}

bool FiniteGyrogroup::is_degenerate() const
{
    for (const auto& g : gyrations_) {
        if (!g.is_identity()) return false;
    }
    return true;
}

}  // namespace gyro
