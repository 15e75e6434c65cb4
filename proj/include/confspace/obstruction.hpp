#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "confspace/smith.hpp"
#include "confspace/sparse_matrix.hpp"

namespace confspace {

/// Labelled integer system A x = b; column j of A belongs to labels[j].
struct IntegerSystem {
    std::vector<std::string> labels;
    SparseIntMatrix A;
    IntVector b;

    std::size_t equations() const { return static_cast<std::size_t>(A.rows()); }
    std::size_t variables() const { return labels.size(); }
};

/// Canonical: digits sorted inside each block, blocks sorted by minimum, so
/// [1|342] and [1|234] name one variable. Strict: the raw string is the variable.
enum class LabelMode { Canonical, Strict };

/// Grammar, one equation per statement:
///   equation := term ('+' term)* '=' integer
///   term     := [count ['*']] 'x_' ( '[' label ']' | '{[' label ']}' )
///   label    := digits ('|' digits)*
/// Whitespace and newlines may separate tokens, so an equation can span
/// lines; '#' starts a comment. Repeated terms add up. Throws ParseError.
IntegerSystem parse_bracket_system(std::string_view text, LabelMode mode = LabelMode::Canonical);

/// Canonical form of a label body such as "21|43" -> "12|34".
std::string canonical_label(std::string_view body);

/// Source text of a builtin system; "n4" is the Z/4 system for F(R^d, 4).
std::string builtin_system_text(std::string_view name);
/// The builtin "n4" has 18 distinct raw labels; use LabelMode::Strict to keep them apart.
IntegerSystem builtin_system(std::string_view name, LabelMode mode = LabelMode::Strict);

/// Bracket-grammar text of a system; parse_bracket_system inverts it.
std::string format_bracket_system(const IntegerSystem& sys);

struct SolvabilityVerdict {
    bool solvable = false;
    std::optional<IntVector> witness;
    std::optional<InfeasibilityCertificate> certificate;
    bool verified = false; ///< witness or certificate re-checked exactly
};

SolvabilityVerdict integer_solvable(const IntegerSystem& sys);

enum class GroupKind { Cyclic, Symmetric };
enum class Rationale { Prime, PrimePower, SolvableSystem, TheoremCitation };

std::string to_string(GroupKind kind);
std::string to_string(Rationale rationale);

struct ExistenceVerdict {
    int n = 0;
    GroupKind group = GroupKind::Cyclic;
    bool exists = false;
    Rationale rationale = Rationale::TheoremCitation;
};

/// Z/n-map F(R^d, n) -> S(W_n^{⊕(d-1)}) exists iff n is not prime. For n = 4
/// the builtin system is solved and the rationale upgraded when it is solvable.
ExistenceVerdict zn_map_exists(int n);
/// Sym_n-map exists iff n is not a prime power.
ExistenceVerdict symn_map_exists(int n);

bool is_prime_power(long long n);

} // namespace confspace
