#pragma once

#include <optional>
#include <string>
#include <variant>

#include "eot/decimal.hpp"

namespace eot {

enum class AnswerFormat { Number, OptionLetter, YesNo, FreeString };

const char* answer_format_name(AnswerFormat f);

/// Gold (or parsed) answer, tagged by format. Text values are compared
/// case-insensitively after trimming; numbers within tolerance.
class GoldAnswer {
public:
    static GoldAnswer number(Decimal v);
    static GoldAnswer option(char letter); // 'A'..'E'
    static GoldAnswer yes_no(bool v);
    static GoldAnswer text(std::string v);

    AnswerFormat format() const;
    const Decimal& as_number() const { return std::get<Decimal>(value_); }
    char as_option() const { return std::get<char>(value_); }
    bool as_yes_no() const { return std::get<bool>(value_); }
    const std::string& as_text() const { return std::get<std::string>(value_); }

    std::string to_display() const; // "76", "D", "yes", "grye"

private:
    std::variant<Decimal, char, bool, std::string> value_;
};

struct Prediction {
    std::string raw_extraction;
    std::optional<GoldAnswer> parsed; // absent = parse failed, scored incorrect
};

// Same-format equality: Number within (1e-6 rel, 1e-9 abs), Option/YesNo exact,
// Text case-insensitive after trimming. Different formats never compare equal.
bool answers_equal(const GoldAnswer& a, const GoldAnswer& b);

bool compare_answers(const Prediction& pred, const GoldAnswer& gold);

} // namespace eot
