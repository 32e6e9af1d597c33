#pragma once

#include "pwftap/market.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace pwftap {

/// Payoff expression over the price path, such as "max(S[2][1] - 2, 0) + 0.25".
/// There is no division; fractional constants are written as decimals.
///
///     expr    := term (('+' | '-') term)*
///     term    := unary ('*' unary)*
///     unary   := '-' unary | primary
///     primary := number | 'S' '[' int ']' '[' int ']' | 'max' '(' expr (',' expr)+ ')' | '(' expr ')'
///
/// Numbers are integers or finite decimals; S[t][j] is the price of asset j
/// (1-based) at time t.
class PayoffExpression {
public:
    /// Throws ParseError with the column of the offending character.
    static PayoffExpression parse(std::string_view text);

    /// Evaluates on every scenario. Throws ValidationError when an index is
    /// out of range for the market.
    Payoff evaluate(const MarketModel& market) const;

    struct Node;

private:
    std::shared_ptr<const Node> root_;
};

}  // namespace pwftap
