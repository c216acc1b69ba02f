#include "diffhier/hierarchy.hpp"

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>

#include "diffhier/automata.hpp"
#include "diffhier/error.hpp"
#include "diffhier/syntactic.hpp"

namespace diffhier {

DifferenceChain::DifferenceChain(Alphabet alphabet, std::vector<Dfa> terms, std::string lattice_tag)
    : alphabet_(std::move(alphabet)), terms_(std::move(terms)), lattice_tag_(std::move(lattice_tag)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].alphabet() != alphabet_)
            throw AlphabetMismatch();
        if (i > 0 && !is_subset(terms_[i], terms_[i - 1]))
            throw InvalidArgument("chain is not decreasing: term " + std::to_string(i + 1) +
                                  " is not contained in term " + std::to_string(i));
    }
}

DifferenceChain DifferenceChain::truncated(std::size_t length) const {
    std::vector<Dfa> kept(terms_.begin(),
                          terms_.begin() + static_cast<std::ptrdiff_t>(std::min(length, terms_.size())));
    return DifferenceChain(alphabet_, std::move(kept), lattice_tag_);
}

namespace {

// Partial sums S_1, ..., S_n of the alternating sum.
std::vector<Dfa> partial_sums(const DifferenceChain& chain) {
    std::vector<Dfa> sums;
    sums.reserve(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i == 0)
            sums.push_back(minimize(chain.term(0)));
        else if (i % 2 == 1)
            sums.push_back(product(BoolOp::Difference, sums.back(), chain.term(i)));
        else
            sums.push_back(product(BoolOp::Union, sums.back(), chain.term(i)));
    }
    return sums;
}

std::vector<Dfa> drop_trailing_empty(std::vector<Dfa> terms) {
    while (!terms.empty() && is_empty(terms.back()))
        terms.pop_back();
    return terms;
}

} // namespace

Dfa eval_chain(const DifferenceChain& chain) {
    if (chain.empty())
        return empty_language(chain.alphabet());
    return partial_sums(chain).back();
}

std::size_t mu(const DifferenceChain& chain, std::string_view word) {
    std::size_t level = 0;
    while (level < chain.size() && chain.term(level).accepts(word))
        ++level;
    return level;
}

DifferenceChain complement_chain(const DifferenceChain& chain) {
    std::vector<Dfa> terms;
    terms.reserve(chain.size() + 1);
    terms.push_back(universal_language(chain.alphabet()));
    for (const Dfa& t : chain.terms())
        terms.push_back(t);
    return DifferenceChain(chain.alphabet(), std::move(terms), chain.lattice_tag());
}

DifferenceChain intersect_chains(const DifferenceChain& x, const DifferenceChain& y) {
    if (x.alphabet() != y.alphabet())
        throw AlphabetMismatch();
    std::string tag = x.lattice_tag() == y.lattice_tag() ? x.lattice_tag() : std::string();
    if (x.empty() || y.empty())
        return DifferenceChain(x.alphabet(), {}, tag);
    const std::size_t n = x.size(), m = y.size();
    std::vector<Dfa> terms;
    for (std::size_t k = 1; k + 1 <= n + m; ++k) {
        Dfa z = empty_language(x.alphabet());
        for (std::size_t i = 1; i <= n; ++i) {
            if (k + 1 < i + 1)
                break;
            std::size_t j = k + 1 - i;
            if (j < 1 || j > m || (i % 2 == 0 && j % 2 == 0))
                continue;
            z = product(BoolOp::Union, z, product(BoolOp::Intersection, x.term(i - 1), y.term(j - 1)));
        }
        terms.push_back(std::move(z));
    }
    return DifferenceChain(x.alphabet(), drop_trailing_empty(std::move(terms)), tag);
}

DifferenceChain normalize_chain(const DifferenceChain& chain) {
    std::vector<Dfa> terms;
    for (const Dfa& t : chain.terms()) {
        if (!terms.empty() && equivalent(terms.back(), t))
            terms.pop_back();
        else
            terms.push_back(minimize(t));
    }
    return DifferenceChain(chain.alphabet(), drop_trailing_empty(std::move(terms)), chain.lattice_tag());
}

DifferenceChain union_chains(const DifferenceChain& x, const DifferenceChain& y) {
    return normalize_chain(
        complement_chain(intersect_chains(complement_chain(x), complement_chain(y))));
}

DifferenceChain from_symmetric_difference(std::span<const Dfa> parts) {
    if (parts.empty())
        throw InvalidArgument("symmetric difference of no languages");
    const Alphabet& alphabet = parts.front().alphabet();
    // at_least[k] = words in at least k of the parts seen so far.
    std::vector<Dfa> at_least{universal_language(alphabet)};
    for (const Dfa& part : parts) {
        if (part.alphabet() != alphabet)
            throw AlphabetMismatch();
        std::vector<Dfa> next{at_least.front()};
        for (std::size_t k = 1; k <= at_least.size(); ++k) {
            Dfa with = product(BoolOp::Intersection, at_least[k - 1], part);
            next.push_back(k < at_least.size() ? product(BoolOp::Union, at_least[k], with) : with);
        }
        at_least = std::move(next);
    }
    at_least.erase(at_least.begin());
    return DifferenceChain(alphabet, drop_trailing_empty(std::move(at_least)));
}

std::vector<Dfa> to_symmetric_difference(const DifferenceChain& chain) {
    return chain.terms();
}

std::string_view to_string(ApproximationStatus status) {
    switch (status) {
    case ApproximationStatus::MemberAtLevel:
        return "member_at_level";
    case ApproximationStatus::NotMemberUpTo:
        return "not_member_up_to";
    case ApproximationStatus::NotInBooleanClosure:
        return "not_in_boolean_closure";
    }
    return "unknown";
}

ApproximationReport best_approximation(const Dfa& language, const ClosureOperator& closure,
                                       std::size_t max_level) {
    const Alphabet& alphabet = closure.universe();
    if (language.alphabet() != alphabet)
        throw AlphabetMismatch();
    if (max_level == 0)
        throw InvalidArgument("max level must be at least 1");
    if (!is_empty(closure.close(empty_language(alphabet))))
        throw InvalidArgument("closure '" + closure.name() + "' does not map the empty set to itself");

    const Dfa l = minimize(language);
    std::vector<Dfa> seq{universal_language(alphabet)}; // L0, L1, ...
    ApproximationReport report(DifferenceChain(alphabet, {}, closure.name()));
    for (std::size_t n = 0; n <= max_level; ++n) {
        const Dfa& prev = seq.back();
        Dfa next = n % 2 == 0 ? closure.close(product(BoolOp::Intersection, prev, l))
                              : closure.close(product(BoolOp::Difference, prev, l));
        report.iterations = n + 1;
        report.sequence.push_back(minimize(next));
        if (is_empty(next)) {
            report.status = ApproximationStatus::MemberAtLevel;
            report.level = n;
            break;
        }
        bool period = n >= 1 && equivalent(next, seq[n - 1]);
        seq.push_back(minimize(next));
        if (period) {
            report.status = ApproximationStatus::NotInBooleanClosure;
            report.level = 0;
            break;
        }
        if (n == max_level) {
            report.status = ApproximationStatus::NotMemberUpTo;
            report.level = max_level;
        }
    }
    seq.erase(seq.begin());
    report.chain = DifferenceChain(alphabet, std::move(seq), closure.name());
    report.search_status = report.status;
    return report;
}

namespace {

// Complements and reverses a chain over `closure`, after padding it with ∅
// to the requested parity, giving a chain over the complemented lattice.
DifferenceChain dualize(const DifferenceChain& chain, bool odd, const std::string& tag) {
    std::vector<Dfa> terms = chain.terms();
    if ((terms.size() % 2 == 1) != odd)
        terms.push_back(empty_language(chain.alphabet()));
    std::vector<Dfa> dual;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        dual.push_back(complement(*it));
    return DifferenceChain(chain.alphabet(), drop_trailing_empty(std::move(dual)), tag);
}

} // namespace

ApproximationReport dual_best_approximation(const Dfa& language, const ClosureOperator& closure,
                                            std::size_t max_level) {
    const std::string tag = "co-" + closure.name();
    // A chain of length k over the closed sets dualises to one of length at
    // most k + 1, so one extra level is enough to settle max_level.
    ApproximationReport direct = best_approximation(language, closure, max_level + 1);
    ApproximationReport other = best_approximation(complement(language), closure, max_level + 1);

    ApproximationReport report(DifferenceChain(closure.universe(), {}, tag));
    report.iterations = direct.iterations + other.iterations;

    std::optional<DifferenceChain> best;
    for (auto [source, odd, name] : {std::tuple{&direct, false, "direct"}, std::tuple{&other, true, "complement"}}) {
        if (source->status != ApproximationStatus::MemberAtLevel)
            continue;
        DifferenceChain candidate = dualize(source->chain, odd, tag);
        if (!best || candidate.size() < best->size()) {
            best = std::move(candidate);
            report.reading = name;
        }
    }
    if (best && best->size() <= max_level) {
        report.status = ApproximationStatus::MemberAtLevel;
        report.level = best->size();
        report.chain = std::move(*best);
        report.search_status = report.status;
        return report;
    }
    report.reading.clear();
    bool periodic = direct.status == ApproximationStatus::NotInBooleanClosure ||
                    other.status == ApproximationStatus::NotInBooleanClosure;
    report.status = periodic ? ApproximationStatus::NotInBooleanClosure : ApproximationStatus::NotMemberUpTo;
    report.level = periodic ? 0 : max_level;
    report.chain = dualize(direct.chain, direct.chain.size() % 2 == 1, tag);
    report.search_status = report.status;
    return report;
}

ApproximationReport decide_level(const Dfa& language, std::string_view lattice, std::size_t max_level) {
    const bool dual = lattice.starts_with("co-");
    std::string_view base = dual ? lattice.substr(3) : lattice;
    ClosureOperator closure = make_closure(base, language.alphabet());
    ApproximationReport report = dual ? dual_best_approximation(language, closure, max_level)
                                      : best_approximation(language, closure, max_level);
    if (base == "shuffle" && report.status == ApproximationStatus::NotMemberUpTo) {
        // Boolean combinations of shuffle ideals are exactly the piecewise
        // testable languages.
        if (!is_j_trivial(syntactic_stamp(language).monoid())) {
            report.status = ApproximationStatus::NotInBooleanClosure;
            report.level = 0;
            report.shortcut = "syntactic monoid is not J-trivial";
        }
    }
    return report;
}

bool is_approximation(const DifferenceChain& chain, const Dfa& language, const ClosureOperator* lattice) {
    if (chain.alphabet() != language.alphabet())
        throw AlphabetMismatch();
    std::optional<ClosureOperator> resolved;
    bool dual = false;
    if (lattice) {
        resolved = *lattice;
    } else if (!chain.lattice_tag().empty()) {
        std::string_view tag = chain.lattice_tag();
        dual = tag.starts_with("co-");
        try {
            resolved = make_closure(dual ? tag.substr(3) : tag, chain.alphabet());
        } catch (const InvalidArgument&) {
            resolved.reset();
        }
    }
    if (resolved) {
        for (const Dfa& t : chain.terms())
            if (!is_closed(*resolved, dual ? complement(t) : t))
                return false;
    }
    std::vector<Dfa> sums = partial_sums(chain);
    for (std::size_t j = 1; j <= sums.size(); ++j) {
        bool ok = j % 2 == 0 ? is_subset(sums[j - 1], language) : is_subset(language, sums[j - 1]);
        if (!ok)
            return false;
    }
    return true;
}

bool is_better(const DifferenceChain& a, const DifferenceChain& b, const Dfa& language) {
    if (a.size() != b.size())
        throw InvalidArgument("chains of different lengths cannot be compared");
    if (a.alphabet() != b.alphabet() || a.alphabet() != language.alphabet())
        throw AlphabetMismatch();
    std::vector<Dfa> sa = partial_sums(a), sb = partial_sums(b);
    for (std::size_t j = 1; j <= sa.size(); ++j) {
        bool ok = j % 2 == 1 ? is_subset(sa[j - 1], sb[j - 1]) : is_subset(sb[j - 1], sa[j - 1]);
        if (!ok)
            return false;
    }
    return true;
}

} // namespace diffhier
