#include "ydc/serialize.hpp"

#include "ydc/errors.hpp"

namespace ydc {

nlohmann::json steps_to_json(const ValidSequence& seq) {
    nlohmann::json steps = nlohmann::json::array();
    for (const Step& s : seq.steps)
        steps.push_back({s.partition.str(), s.lambda.str(), s.k});
    return steps;
}

ValidSequence steps_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw DomainError("certificate steps must be an array");
    ValidSequence seq;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 3)
            throw DomainError("certificate step must be [partition, lambda, k]");
        seq.steps.push_back({Partition::parse(entry[0].get<std::string>()),
                             Progression::parse(entry[1].get<std::string>()),
                             entry[2].get<int>()});
    }
    return seq;
}

nlohmann::json certificate_to_json(const DifficultyResult& result) {
    return {{"schema", 1},
            {"target", result.target.str()},
            {"delta", result.delta},
            {"steps", steps_to_json(result.certificate)}};
}

DifficultyResult certificate_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("schema", 0) != 1)
        throw DomainError("unsupported certificate schema");
    DifficultyResult result;
    result.target = Partition::parse(j.at("target").get<std::string>());
    result.delta = j.at("delta").get<int>();
    result.certificate = steps_from_json(j.at("steps"));
    int cost = verify_sequence(result.certificate, result.target);
    if (cost != result.delta)
        throw VerificationError(VerificationError::Kind::WrongEndpoint, -1,
                                "certificate cost does not match declared delta");
    return result;
}

}  // namespace ydc
