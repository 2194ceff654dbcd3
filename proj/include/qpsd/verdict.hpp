// Classification outcome shared by the 2-dim and 3-dim deciders.
#pragma once

#include "qpsd/certificates.hpp"
#include "qpsd/form.hpp"

#include <optional>
#include <string>

namespace qpsd {

enum class Tri { False, True, Unknown };

inline const char* to_string(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        default: return "unknown";
    }
}

// Invariants: is_pd == True implies is_psd; !is_psd implies is_pd == False.
struct Verdict {
    bool is_psd = false;
    Tri is_pd = Tri::False;
    std::string family;   // e.g. "T3.9"
    std::string subcase;  // e.g. "b2"; empty when the family has no subcases
    SignedPerm normalizer = SignedPerm::identity(3);
    Certificate certificate;
    std::optional<ZeroWitness> zero_witness;
    bool certified = true;  // false only for oracle-backed answers outside the case table
    std::string note;

    std::string case_id() const { return subcase.empty() ? family : family + "." + subcase; }
    bool has_negative_witness() const { return std::holds_alternative<NegativeWitness>(certificate); }
};

}  // namespace qpsd
