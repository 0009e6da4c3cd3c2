#include "eot/answers.hpp"

#include "eot/util.hpp"

namespace eot {

const char* answer_format_name(AnswerFormat f) {
    switch (f) {
        case AnswerFormat::Number: return "number";
        case AnswerFormat::OptionLetter: return "option";
        case AnswerFormat::YesNo: return "yesno";
        case AnswerFormat::FreeString: return "string";
    }
    return "unknown";
}

GoldAnswer GoldAnswer::number(Decimal v) {
    GoldAnswer a;
    a.value_ = v;
    return a;
}

GoldAnswer GoldAnswer::option(char letter) {
    GoldAnswer a;
    a.value_ = letter;
    return a;
}

GoldAnswer GoldAnswer::yes_no(bool v) {
    GoldAnswer a;
    a.value_ = v;
    return a;
}

GoldAnswer GoldAnswer::text(std::string v) {
    GoldAnswer a;
    a.value_ = std::move(v);
    return a;
}

AnswerFormat GoldAnswer::format() const {
    if (std::holds_alternative<Decimal>(value_)) return AnswerFormat::Number;
    if (std::holds_alternative<char>(value_)) return AnswerFormat::OptionLetter;
    if (std::holds_alternative<bool>(value_)) return AnswerFormat::YesNo;
    return AnswerFormat::FreeString;
}

std::string GoldAnswer::to_display() const {
    switch (format()) {
        case AnswerFormat::Number: return as_number().to_string();
        case AnswerFormat::OptionLetter: return std::string(1, as_option());
        case AnswerFormat::YesNo: return as_yes_no() ? "yes" : "no";
        case AnswerFormat::FreeString: return as_text();
    }
    return {};
}

bool answers_equal(const GoldAnswer& a, const GoldAnswer& b) {
    if (a.format() != b.format()) return false;
    switch (a.format()) {
        case AnswerFormat::Number:
            return Decimal::close(a.as_number(), b.as_number());
        case AnswerFormat::OptionLetter:
            return a.as_option() == b.as_option();
        case AnswerFormat::YesNo:
            return a.as_yes_no() == b.as_yes_no();
        case AnswerFormat::FreeString:
            return to_lower(trim(a.as_text())) == to_lower(trim(b.as_text()));
    }
    return false;
}

bool compare_answers(const Prediction& pred, const GoldAnswer& gold) {
    if (!pred.parsed) return false;
    return answers_equal(*pred.parsed, gold);
}

} // namespace eot
