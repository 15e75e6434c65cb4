#include "confspace/obstruction.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "confspace/errors.hpp"
#include "confspace/group.hpp"

namespace confspace {

namespace {

constexpr std::string_view kN4 = R"(# Z/4-equivariant obstruction system for F(R^d, 4), raw labels
x_[1|234] + x_[1|342] + x_[1|243] + x_[1|234] + x_[12|34] + x_[13|24] + x_[14|23] +
x_[14|23] + x_[13|24] + x_[12|34] + x_[123|4] + x_[124|3] + x_[134|2] + x_[123|4] = 1
x_[1|243] + x_[1|432] + x_[1|243] + x_[1|234] + x_[12|43] + x_[13|24] + x_[14|23] +
x_[14|23] + x_[13|24] + x_[12|43] + x_[123|4] + x_[124|3] + x_[143|2] + x_[124|3] = 1
x_[1|324] + x_[1|342] + x_[1|243] + x_[1|324] + x_[12|34] + x_[13|24] + x_[14|32] +
x_[14|32] + x_[13|24] + x_[12|34] + x_[132|4] + x_[124|3] + x_[134|2] + x_[132|4] = 1
x_[1|342] + x_[1|342] + x_[1|423] + x_[1|324] + x_[12|34] + x_[13|42] + x_[14|32] +
x_[14|32] + x_[13|42] + x_[12|34] + x_[132|4] + x_[142|3] + x_[134|2] + x_[134|2] = 1
x_[1|423] + x_[1|432] + x_[1|423] + x_[1|234] + x_[12|43] + x_[13|42] + x_[14|23] +
x_[14|23] + x_[13|42] + x_[12|43] + x_[123|4] + x_[142|3] + x_[143|2] + x_[142|3] = 1
x_[1|432] + x_[1|432] + x_[1|423] + x_[1|324] + x_[12|43] + x_[13|42] + x_[14|32] +
x_[14|32] + x_[13|42] + x_[12|43] + x_[132|4] + x_[142|3] + x_[143|2] + x_[143|2] = 1
)";

class Parser {
public:
    Parser(std::string_view text, LabelMode mode) : text_(text), mode_(mode) {}

    IntegerSystem run() {
        std::vector<std::map<std::size_t, BigInt>> rows;
        std::vector<BigInt> rhs;
        std::map<std::string, std::size_t> column;
        std::vector<std::string> labels;
        skip_space();
        while (!at_end()) {
            std::map<std::size_t, BigInt> row;
            for (;;) {
                auto [count, label] = term();
                auto [it, inserted] = column.emplace(label, labels.size());
                if (inserted)
                    labels.push_back(label);
                row[it->second] += count;
                skip_space();
                if (peek() == '+') {
                    advance();
                    skip_space();
                    continue;
                }
                if (peek() == '=')
                    break;
                fail(at_end() ? "equation ends without '= <integer>'" : "expected '+' or '='");
            }
            advance();
            skip_inline_space();
            rhs.push_back(integer_rhs());
            skip_inline_space();
            if (!at_end() && peek() != '\n' && peek() != '#')
                fail("unexpected text after the right-hand side");
            rows.push_back(std::move(row));
            skip_space();
        }
        IntegerSystem sys;
        sys.labels = std::move(labels);
        std::vector<IntTriplet> trips;
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [c, v] : rows[r])
                trips.emplace_back(static_cast<std::ptrdiff_t>(r), static_cast<std::ptrdiff_t>(c), v);
        sys.A = SparseIntMatrix::from_triplets(static_cast<Eigen::Index>(rows.size()),
                                               static_cast<Eigen::Index>(sys.labels.size()), trips);
        sys.b.resize(static_cast<Eigen::Index>(rhs.size()));
        for (std::size_t r = 0; r < rhs.size(); ++r)
            sys.b(static_cast<Eigen::Index>(r)) = rhs[r];
        return sys;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

    void skip_space() {
        while (!at_end()) {
            if (peek() == '#') {
                while (!at_end() && peek() != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(peek()))) {
                advance();
            } else {
                break;
            }
        }
    }
    void skip_inline_space() {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r'))
            advance();
    }
    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    std::pair<BigInt, std::string> term() {
        BigInt count = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                digits += peek();
                advance();
            }
            count = BigInt(digits);
            if (count == 0)
                fail("term multiplicity must be positive");
            skip_inline_space();
            if (peek() == '*') {
                advance();
                skip_inline_space();
            }
        }
        expect('x');
        expect('_');
        const bool braced = peek() == '{';
        if (braced)
            advance();
        expect('[');
        const int label_line = line_, label_col = col_;
        std::string body;
        while (!at_end() && peek() != ']' && peek() != '\n') {
            body += peek();
            advance();
        }
        expect(']');
        if (braced)
            expect('}');
        try {
            const auto canon = canonical_label(body);
            return {count, "[" + (mode_ == LabelMode::Canonical ? canon : body) + "]"};
        } catch (const DomainError& e) {
            throw ParseError(e.what(), label_line, label_col);
        }
    }

    BigInt integer_rhs() {
        std::string digits;
        if (peek() == '-' || peek() == '+') {
            digits += peek();
            advance();
        }
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        if (digits.empty() || digits == "-" || digits == "+" ||
            (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '.')))
            fail("right-hand side is not an integer");
        if (digits.front() == '+')
            digits.erase(0, 1);
        return BigInt(digits);
    }

    std::string_view text_;
    LabelMode mode_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

} // namespace

std::string canonical_label(std::string_view body) {
    std::vector<std::string> blocks(1);
    std::vector<bool> seen(10, false);
    for (char c : body) {
        if (c == '|') {
            blocks.emplace_back();
            continue;
        }
        if (c < '1' || c > '9')
            throw DomainError(std::string("malformed label: unexpected '") + c + "'");
        if (seen[static_cast<std::size_t>(c - '0')])
            throw DomainError(std::string("malformed label: element ") + c + " repeated");
        seen[static_cast<std::size_t>(c - '0')] = true;
        blocks.back() += c;
    }
    for (auto& b : blocks) {
        if (b.empty())
            throw DomainError("malformed label: empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end());
    std::string out;
    for (const auto& b : blocks)
        out += (out.empty() ? "" : "|") + b;
    return out;
}

IntegerSystem parse_bracket_system(std::string_view text, LabelMode mode) {
    return Parser(text, mode).run();
}

std::string builtin_system_text(std::string_view name) {
    if (name == "n4")
        return std::string(kN4);
    throw DomainError("unknown builtin system '" + std::string(name) + "' (known: n4)");
}

IntegerSystem builtin_system(std::string_view name, LabelMode mode) {
    return parse_bracket_system(builtin_system_text(name), mode);
}

std::string format_bracket_system(const IntegerSystem& sys) {
    std::vector<std::vector<std::pair<std::ptrdiff_t, BigInt>>> rows(sys.equations());
    for (const auto& t : sys.A.entries())
        rows[static_cast<std::size_t>(t.row())].emplace_back(t.col(), t.value());
    std::ostringstream os;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        bool first = true;
        for (const auto& [c, v] : rows[r]) {
            if (v <= 0)
                throw DomainError("bracket grammar needs positive multiplicities");
            os << (first ? "" : " + ");
            if (v != 1)
                os << v << " ";
            os << "x_" << sys.labels[static_cast<std::size_t>(c)];
            first = false;
        }
        if (first)
            throw DomainError("bracket grammar cannot express an empty equation");
        os << " = " << sys.b(static_cast<Eigen::Index>(r)) << "\n";
    }
    return os.str();
}

SolvabilityVerdict integer_solvable(const IntegerSystem& sys) {
    SolvabilityVerdict out;
    auto outcome = solve_integer(sys.A, sys.b);
    if (auto* sol = std::get_if<IntegerSolution>(&outcome)) {
        out.solvable = true;
        out.verified = verify_solution(sys.A, sys.b, sol->x);
        out.witness = sol->x;
    } else {
        auto& cert = std::get<InfeasibilityCertificate>(outcome);
        out.verified = verify_certificate(sys.A, sys.b, cert);
        out.certificate = cert;
    }
    return out;
}

std::string to_string(GroupKind kind) { return kind == GroupKind::Cyclic ? "cyclic" : "symmetric"; }

std::string to_string(Rationale rationale) {
    switch (rationale) {
    case Rationale::Prime:
        return "prime";
    case Rationale::PrimePower:
        return "prime-power";
    case Rationale::SolvableSystem:
        return "solvable-system";
    case Rationale::TheoremCitation:
        return "theorem-citation";
    }
    return "unknown";
}

bool is_prime_power(long long n) {
    if (n < 2)
        return false;
    long long q = 2;
    while (n % q != 0)
        ++q;
    while (n % q == 0)
        n /= q;
    return n == 1;
}

ExistenceVerdict zn_map_exists(int n) {
    if (n < 2)
        throw DomainError("zn_map_exists needs n >= 2");
    ExistenceVerdict v;
    v.n = n;
    v.group = GroupKind::Cyclic;
    if (is_prime(n)) {
        v.exists = false;
        v.rationale = Rationale::Prime;
        return v;
    }
    v.exists = true;
    v.rationale = Rationale::TheoremCitation;
    if (n == 4) {
        const auto verdict = integer_solvable(builtin_system("n4"));
        if (verdict.solvable && verdict.verified)
            v.rationale = Rationale::SolvableSystem;
    }
    return v;
}

ExistenceVerdict symn_map_exists(int n) {
    if (n < 2)
        throw DomainError("symn_map_exists needs n >= 2");
    ExistenceVerdict v;
    v.n = n;
    v.group = GroupKind::Symmetric;
    v.exists = !is_prime_power(n);
    v.rationale = v.exists ? Rationale::TheoremCitation : Rationale::PrimePower;
    return v;
}

} // namespace confspace
