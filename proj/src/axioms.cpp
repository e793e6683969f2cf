#include "gyro/axioms.hpp"

#include <map>
#include <sstream>

#include "axiom_analysis.hpp"

namespace gyro {

std::string_view axiom_name(Axiom axiom)
{
    switch (axiom) {
    case Axiom::OutOfRangeEntry: return "OutOfRangeEntry";
    case Axiom::NoLeftIdentity: return "NoLeftIdentity";
    case Axiom::DuplicateLeftIdentity: return "DuplicateLeftIdentity";
    case Axiom::MissingLeftInverse: return "MissingLeftInverse";
    case Axiom::DuplicateLeftInverse: return "DuplicateLeftInverse";
    case Axiom::GyrNotBijective: return "GyrNotBijective";
    case Axiom::GyrNotAutomorphism: return "GyrNotAutomorphism";
    case Axiom::GyroassociativityFails: return "GyroassociativityFails";
    case Axiom::LeftLoopFails: return "LeftLoopFails";
    }
    return "Unknown";
}

std::string Violation::describe() const
{
    std::ostringstream os;
    os << axiom_name(axiom) << '(';
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << ')';
    if (occurrences > 1) os << " x" << occurrences;
    return os.str();
}

const Violation* ValidationReport::find(Axiom axiom) const
{
    for (const auto& v : violations) {
        if (v.axiom == axiom) return &v;
    }
    return nullptr;
}

namespace detail {

namespace {

Element el(std::size_t x) { return static_cast<Element>(x); }

void add(ValidationReport& report, Axiom axiom, std::vector<Element> witness, std::size_t count)
{
    report.valid = false;
    report.violations.push_back({axiom, std::move(witness), count});
}

}  // namespace

AxiomAnalysis analyze(const CayleyTable& table, Execution exec)
{
    AxiomAnalysis out;
    auto& report = out.report;
    const auto n = table.order();

    {
        std::size_t bad = 0;
        std::vector<Element> first;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (table(a, b) >= n) {
                    if (bad++ == 0) first = {el(a), el(b)};
                }
            }
        }
        if (bad != 0) {
            add(report, Axiom::OutOfRangeEntry, first, bad);
            return out;
        }
    }

    std::vector<Element> identities;
    for (std::size_t e = 0; e < n; ++e) {
        bool is_left_identity = true;
        for (std::size_t a = 0; a < n && is_left_identity; ++a) is_left_identity = table(e, a) == a;
        if (is_left_identity) identities.push_back(el(e));
    }
    if (identities.empty()) {
        add(report, Axiom::NoLeftIdentity, {}, 1);
        return out;
    }
    if (identities.size() > 1) {
        add(report, Axiom::DuplicateLeftIdentity, {identities[0], identities[1]},
            identities.size() - 1);
    }
    const Element e = identities.front();
    out.identity = e;

    out.left_inverse.assign(n, 0);
    {
        std::size_t missing = 0, duplicate = 0;
        std::vector<Element> first_missing, first_duplicate;
        for (std::size_t a = 0; a < n; ++a) {
            std::vector<Element> inverses;
            for (std::size_t b = 0; b < n; ++b) {
                if (table(b, a) == e) inverses.push_back(el(b));
            }
            if (inverses.empty()) {
                if (missing++ == 0) first_missing = {el(a)};
                continue;
            }
            if (inverses.size() > 1 && duplicate++ == 0) {
                first_duplicate = {el(a), inverses[0], inverses[1]};
            }
            out.left_inverse[a] = inverses.front();
        }
        if (missing != 0) {
            add(report, Axiom::MissingLeftInverse, first_missing, missing);
            return out;
        }
        if (duplicate != 0) add(report, Axiom::DuplicateLeftInverse, first_duplicate, duplicate);
    }

    const auto images = exec == Execution::parallel
                            ? kernels::gyrator_images(table, out.left_inverse)
                            : kernels::reference::gyrator_images(table, out.left_inverse);

    // Deduplicate the n^2 candidate gyrations; the ids follow first appearance.
    std::map<std::vector<Element>, std::uint32_t> seen;
    std::vector<std::vector<Element>> distinct;
    out.gyr_index.assign(n * n, 0);
    for (std::size_t ab = 0; ab < n * n; ++ab) {
        std::vector<Element> slice(images.begin() + static_cast<std::ptrdiff_t>(ab * n),
                                   images.begin() + static_cast<std::ptrdiff_t>((ab + 1) * n));
        auto [it, inserted] = seen.try_emplace(std::move(slice), static_cast<std::uint32_t>(distinct.size()));
        if (inserted) distinct.push_back(it->first);
        out.gyr_index[ab] = it->second;
    }

    std::vector<bool> bijective(distinct.size());
    for (std::size_t i = 0; i < distinct.size(); ++i) bijective[i] = Permutation::is_bijection(distinct[i]);
    {
        std::size_t bad = 0;
        std::vector<Element> first;
        for (std::size_t ab = 0; ab < n * n; ++ab) {
            if (!bijective[out.gyr_index[ab]] && bad++ == 0) first = {el(ab / n), el(ab % n)};
        }
        if (bad != 0) add(report, Axiom::GyrNotBijective, first, bad);
    }

    // Only bijective candidates are checked for the homomorphism property.
    std::vector<Permutation> perms;
    std::vector<std::size_t> perm_of(distinct.size(), SIZE_MAX);
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        if (bijective[i]) {
            perm_of[i] = perms.size();
            perms.emplace_back(distinct[i]);
        }
    }
    const auto hom = exec == Execution::parallel ? kernels::automorphism_failures(table, perms)
                                                 : kernels::reference::automorphism_failures(table, perms);
    {
        std::size_t bad = 0;
        std::vector<Element> first;
        for (std::size_t ab = 0; ab < n * n; ++ab) {
            const auto p = perm_of[out.gyr_index[ab]];
            if (p == SIZE_MAX || !hom[p]) continue;
            if (bad++ == 0) first = {el(ab / n), el(ab % n), hom[p]->first, hom[p]->second};
        }
        if (bad != 0) add(report, Axiom::GyrNotAutomorphism, first, bad);
    }

    const auto assoc = exec == Execution::parallel
                           ? kernels::gyroassociativity_failures(table, images)
                           : kernels::reference::gyroassociativity_failures(table, images);
    if (assoc.any()) add(report, Axiom::GyroassociativityFails, assoc.first, assoc.count);

    {
        std::size_t bad = 0;
        std::vector<Element> first;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (out.gyr_index[a * n + b] != out.gyr_index[table(a, b) * n + b] && bad++ == 0) {
                    first = {el(a), el(b)};
                }
            }
        }
        if (bad != 0) add(report, Axiom::LeftLoopFails, first, bad);
    }

    if (report.valid) {
        out.gyrations.reserve(distinct.size());
        for (auto& d : distinct) out.gyrations.emplace_back(std::move(d));
    }
    return out;
}

}  // namespace detail

ValidationReport verify_axioms(const CayleyTable& table, Execution exec)
{
    return detail::analyze(table, exec).report;
}

}  // namespace gyro
