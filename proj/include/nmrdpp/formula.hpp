#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nmrdpp {

// Past linear temporal logic. Derived operators are expanded at parse time:
// pdi f      -> true snc f
// pbx f      -> ~(true snc ~f)
// prv^k f    -> k nested prv
// a -> b     -> ~a | b
// a <-> b    -> (~a | b) & (~b | a)
enum class PltlOp : std::uint8_t { True, False, Atom, Not, And, Or, Prev, Since };

struct PltlNode;
using Pltl = std::shared_ptr<const PltlNode>;

struct PltlNode {
    PltlOp op;
    std::string atom;  // Atom only
    int prop = -1;     // proposition index once bound, -1 otherwise
    Pltl lhs, rhs;     // unary operators use lhs
    std::size_t hash = 0;
};

Pltl pltl_true();
Pltl pltl_false();
Pltl pltl_atom(std::string name, int prop = -1);
Pltl pltl_not(Pltl f);
Pltl pltl_and(Pltl a, Pltl b);
Pltl pltl_or(Pltl a, Pltl b);
Pltl pltl_prev(Pltl f);
Pltl pltl_since(Pltl a, Pltl b);

// $FLTL: negation normal form future logic with the reward constant $.
// alw f normalizes to f wun false at parse time; negation is pushed to
// atoms and rejected if it reaches next/wun/alw/$.
enum class FltlOp : std::uint8_t { True, False, Lit, And, Or, Next, WUntil, Dollar };

struct FltlNode;
using Fltl = std::shared_ptr<const FltlNode>;

struct FltlNode {
    FltlOp op;
    std::string atom;      // Lit only
    bool positive = true;  // Lit polarity
    int prop = -1;
    Fltl lhs, rhs;
    std::size_t hash = 0;
};

Fltl fltl_true();
Fltl fltl_false();
Fltl fltl_lit(std::string name, bool positive, int prop = -1);
Fltl fltl_and(Fltl a, Fltl b);
Fltl fltl_or(Fltl a, Fltl b);
Fltl fltl_next(Fltl f);
Fltl fltl_wuntil(Fltl a, Fltl b);
Fltl fltl_dollar();

bool is_true(const Pltl& f);
bool is_false(const Pltl& f);
bool is_true(const Fltl& f);
bool is_false(const Fltl& f);

// Structural equality / deterministic total order (independent of pointers).
bool equal(const Pltl& a, const Pltl& b);
bool equal(const Fltl& a, const Fltl& b);
int compare(const Pltl& a, const Pltl& b);
int compare(const Fltl& a, const Fltl& b);

std::string to_string(const Pltl& f);
std::string to_string(const Fltl& f);

// Sound local rewrites only: true/false units, double negation, idempotence
// on syntactically equal children. Bottom-up pass iterated to a fixpoint.
Pltl simplify(const Pltl& f);
Fltl simplify(const Fltl& f);

// Resolve atom names against a proposition list. Throws std::invalid_argument
// on an unknown atom.
Pltl bind(const Pltl& f, const std::vector<std::string>& props);
Fltl bind(const Fltl& f, const std::vector<std::string>& props);

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int l, int c)
        : std::runtime_error(msg + " (line " + std::to_string(l) + ", column " +
                             std::to_string(c) + ")"),
          line(l), col(c) {}
};

Pltl parse_pltl(std::string_view text);
Fltl parse_fltl(std::string_view text);

enum class Dialect { Pltl, Fltl };

struct RewardEntry {
    std::string name;
    double value = 0;
    Pltl pltl;  // set in the matching dialect, null in the other
    Fltl fltl;
};

struct RewardSpec {
    Dialect dialect = Dialect::Pltl;
    std::vector<RewardEntry> entries;
    std::vector<Pltl> control_pltl;
    std::vector<Fltl> control_fltl;

    bool empty() const { return entries.empty() && control_pltl.empty() && control_fltl.empty(); }
};

// Reward file: a `dialect pltl|fltl` header, then `reward NAME VALUE : FORMULA`
// and `control : FORMULA` lines. `%` starts a comment.
RewardSpec parse_reward_file(std::string_view text);

RewardSpec bind(const RewardSpec& spec, const std::vector<std::string>& props);

}  // namespace nmrdpp
