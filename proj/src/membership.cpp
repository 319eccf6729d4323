#include "gsep/membership.hpp"

#include <stdexcept>

namespace gsep {

MembershipVerdict gk_membership(const Graph& g, int k, const MembershipOptions& opt) {
    if (k < 0) throw std::invalid_argument("membership level must be nonnegative");
    MembershipVerdict verdict;
    verdict.k = k;
    verdict.in_class = true;
    for_each_minimal_separator(g, opt.enumeration, [&](const SeparatorRecord& rec) {
        std::optional<CliqueCover> cover = k_simplicial_cover(g, rec.separator, k);
        if (!cover) {
            verdict.in_class = false;
            if (!verdict.witness ||
                VertexSet::lex_less(rec.separator, verdict.witness->separator)) {
                verdict.witness = rec;
            }
            // Serial enumeration streams one separator at a time, so the
            // first violation ends the scan.
            return opt.enumeration.threads > 1;
        }
        if (static_cast<int>(verdict.covers.size()) < opt.cover_limit) {
            verdict.covers.emplace_back(rec.separator, std::move(*cover));
        }
        return true;
    });
    if (!verdict.in_class) verdict.covers.clear();
    return verdict;
}

int separator_profile(const Graph& g, const MembershipOptions& opt) {
    int profile = 0;
    for_each_minimal_separator(g, opt.enumeration, [&](const SeparatorRecord& rec) {
        profile = std::max(profile, clique_cover_number(g, rec.separator));
        return true;
    });
    return profile;
}

}  // namespace gsep
