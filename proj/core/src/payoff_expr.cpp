#include "pwftap/payoff_expr.hpp"

#include "pwftap/errors.hpp"

#include <cctype>
#include <vector>

namespace pwftap {

struct PayoffExpression::Node {
    enum class Kind { constant, price, add, subtract, multiply, negate, max };
    Kind kind = Kind::constant;
    Rational value;
    std::size_t time = 0;
    std::size_t asset = 0;  // 1-based
    std::vector<std::shared_ptr<const Node>> children;
};

namespace {

using Node = PayoffExpression::Node;
using NodePtr = std::shared_ptr<const Node>;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse_all() {
        NodePtr e = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("payoff expression, column " + std::to_string(pos_ + 1), what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    static NodePtr binary(Node::Kind kind, NodePtr a, NodePtr b) {
        auto n = std::make_shared<Node>();
        n->kind = kind;
        n->children = {std::move(a), std::move(b)};
        return n;
    }

    NodePtr expr() {
        NodePtr left = term();
        for (;;) {
            if (accept('+')) {
                left = binary(Node::Kind::add, left, term());
            } else if (accept('-')) {
                left = binary(Node::Kind::subtract, left, term());
            } else {
                return left;
            }
        }
    }

    NodePtr term() {
        NodePtr left = unary();
        while (accept('*')) left = binary(Node::Kind::multiply, left, unary());
        return left;
    }

    NodePtr unary() {
        if (accept('-')) {
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::negate;
            n->children = {unary()};
            return n;
        }
        return primary();
    }

    std::size_t index() {
        expect('[');
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer index");
        std::size_t value = std::stoul(std::string(text_.substr(start, pos_ - start)));
        expect(']');
        return value;
    }

    NodePtr primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
                ++pos_;
            }
            auto n = std::make_shared<Node>();
            try {
                n->value = parse_rational(text_.substr(start, pos_ - start));
            } catch (const std::invalid_argument&) {
                pos_ = start;
                fail("malformed number");
            }
            return n;
        }
        if (c == 'S') {
            ++pos_;
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::price;
            n->time = index();
            n->asset = index();
            if (n->asset == 0) fail("asset indices start at 1");
            return n;
        }
        if (text_.substr(pos_, 3) == "max") {
            pos_ += 3;
            expect('(');
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::max;
            n->children.push_back(expr());
            while (accept(',')) n->children.push_back(expr());
            if (n->children.size() < 2) fail("max needs at least two arguments");
            expect(')');
            return n;
        }
        if (c == '/') fail("division is not part of the payoff grammar; write constants as decimals");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

Rational eval(const Node& n, const MarketModel& market, ScenarioIndex w) {
    switch (n.kind) {
        case Node::Kind::constant: return n.value;
        case Node::Kind::price: return market.price(w, n.time)[n.asset - 1];
        case Node::Kind::add: return eval(*n.children[0], market, w) + eval(*n.children[1], market, w);
        case Node::Kind::subtract: return eval(*n.children[0], market, w) - eval(*n.children[1], market, w);
        case Node::Kind::multiply: return eval(*n.children[0], market, w) * eval(*n.children[1], market, w);
        case Node::Kind::negate: return -eval(*n.children[0], market, w);
        case Node::Kind::max: {
            Rational best = eval(*n.children[0], market, w);
            for (std::size_t i = 1; i < n.children.size(); ++i) {
                Rational v = eval(*n.children[i], market, w);
                if (v > best) best = v;
            }
            return best;
        }
    }
    return 0;
}

void check_indices(const Node& n, const MarketModel& market) {
    if (n.kind == Node::Kind::price) {
        if (n.time > market.horizon()) {
            throw ValidationError("payoff expression: S[" + std::to_string(n.time) + "] is beyond horizon T = " +
                                  std::to_string(market.horizon()));
        }
        if (n.asset > market.num_assets()) {
            throw ValidationError("payoff expression: asset " + std::to_string(n.asset) + " but d = " +
                                  std::to_string(market.num_assets()));
        }
    }
    for (const auto& c : n.children) check_indices(*c, market);
}

}  // namespace

PayoffExpression PayoffExpression::parse(std::string_view text) {
    PayoffExpression e;
    e.root_ = Parser(text).parse_all();
    return e;
}

Payoff PayoffExpression::evaluate(const MarketModel& market) const {
    check_indices(*root_, market);
    Payoff out(market.num_scenarios());
    for (std::size_t w = 0; w < out.size(); ++w) out[w] = eval(*root_, market, w);
    return out;
}

}  // namespace pwftap
