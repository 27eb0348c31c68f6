// Instance model: validation, JSON I/O, generator enumeration, hashing.
#include "doctest.h"

#include "rees/instance.hpp"
#include "rees/monomial.hpp"
#include "rees/order.hpp"
#include "rees/text.hpp"

#include <string>
#include <vector>

using namespace rees;

namespace {

const Instance kTriangle{3,
                         {IdealSpec{{1, 2}, 1}, IdealSpec{{2, 3}, 1}, IdealSpec{{1, 3}, 1}}};

std::vector<std::string> gen_strings(const IdealSpec& spec, int n, const TermOrder& ord) {
    std::vector<std::string> out;
    for (const auto& g : generators(spec, n, ord)) out.push_back(to_string(g));
    return out;
}

} // namespace

TEST_CASE("instance validation rejects out-of-range data") {
    CHECK_NOTHROW(validate(kTriangle));

    CHECK_THROWS_AS(validate(Instance{3, {}}), InputError);
    CHECK_THROWS_AS(validate(Instance{3, {IdealSpec{{}, 1}}}), InputError);
    CHECK_THROWS_AS(validate(Instance{3, {IdealSpec{{0, 1}, 1}}}), InputError);
    CHECK_THROWS_AS(validate(Instance{3, {IdealSpec{{1, 4}, 1}}}), InputError);
    CHECK_THROWS_AS(validate(Instance{3, {IdealSpec{{2, 2}, 1}}}), InputError);
    CHECK_THROWS_AS(validate(Instance{3, {IdealSpec{{1, 2}, 0}}}), InputError);
    CHECK_THROWS_AS(validate(Instance{0, {IdealSpec{{1}, 1}}}), InputError);
}

TEST_CASE("instance JSON parses, validates, and round-trips") {
    const std::string text = R"({"n": 3, "ideals": [{"vars": [1,2], "power": 1},)"
                             R"( {"vars": [2,3], "power": 1}, {"vars": [1,3], "power": 1}]})";
    auto [inst, opts] = parse_instance_json(text);
    CHECK(inst == kTriangle);
    CHECK(inst.r() == 3);
    CHECK(inst.block(2).support == std::vector<int>{2, 3});
    CHECK_FALSE(opts.degcap.has_value());
    CHECK_FALSE(opts.xorder.has_value());
    CHECK_FALSE(opts.variant.has_value());

    auto [again, opts2] = parse_instance_json(instance_to_json(inst));
    CHECK(again == inst);
}

TEST_CASE("instance options ride along in the JSON") {
    const std::string text = R"({"n": 2, "ideals": [{"vars": [1,2], "power": 2}],)"
                             R"( "options": {"degcap": 6, "xorder": [2,1],)"
                             R"( "order-variant": "x-above-T"}})";
    auto [inst, opts] = parse_instance_json(text);
    CHECK(inst.n == 2);
    REQUIRE(opts.degcap.has_value());
    CHECK(*opts.degcap == 6);
    REQUIRE(opts.xorder.has_value());
    CHECK(*opts.xorder == std::vector<int>{2, 1});
    REQUIRE(opts.variant.has_value());
    CHECK(*opts.variant == OrderVariant::x_above_t);

    const std::string conv = R"({"n": 1, "ideals": [{"vars": [1], "power": 1}],)"
                             R"( "options": {"order-variant": "convention"}})";
    CHECK(*parse_instance_json(conv).second.variant == OrderVariant::t_above_x);
}

TEST_CASE("malformed instance JSON is an input error") {
    CHECK_THROWS_AS((void)parse_instance_json("not json"), InputError);
    CHECK_THROWS_AS((void)parse_instance_json("{}"), InputError);
    CHECK_THROWS_AS((void)parse_instance_json(R"({"n": 3})"), InputError);
    CHECK_THROWS_AS((void)parse_instance_json(R"({"n": 3, "ideals": [{"power": 1}]})"),
                    InputError);
    CHECK_THROWS_AS(
        (void)parse_instance_json(
            R"({"n": 1, "ideals": [{"vars": [1], "power": 1}], "options": {"order-variant": "zzz"}})"),
        InputError);
}

TEST_CASE("ideal power generators come out ascending") {
    TermOrder ord = TermOrder::standard(3);
    CHECK(gen_strings(IdealSpec{{1, 2}, 1}, 3, ord) == std::vector<std::string>{"x2", "x1"});
    CHECK(gen_strings(IdealSpec{{1, 2}, 2}, 3, ord) ==
          std::vector<std::string>{"x2^2", "x1*x2", "x1^2"});
    CHECK(gen_strings(IdealSpec{{1, 3}, 3}, 3, ord) ==
          std::vector<std::string>{"x3^3", "x1*x3^2", "x1^2*x3", "x1^3"});
    // Power zero denotes the trivial ideal power, generated by 1; the graph
    // layer uses it for the reduced labels of first-power blocks.
    auto unit_gens = generators(IdealSpec{{1, 2}, 0}, 3, ord);
    REQUIRE(unit_gens.size() == 1);
    CHECK(unit_gens[0].is_unit());
}

TEST_CASE("the instance's T-variables enumerate descending") {
    TermOrder ord = TermOrder::standard(3);
    std::vector<std::string> got;
    for (const auto& tv : t_variables(kTriangle, ord)) got.push_back(to_string(tv));
    CHECK(got == std::vector<std::string>{"T[x1,t3]", "T[x3,t3]", "T[x2,t2]", "T[x3,t2]",
                                          "T[x1,t1]", "T[x2,t1]"});
}

TEST_CASE("T-variable membership in an instance") {
    auto tv = [](int block, const std::string& g) {
        return TVariable{block, parse_xmonomial(g, 3)};
    };
    CHECK(is_instance_tvariable(tv(1, "x1"), kTriangle));
    CHECK(is_instance_tvariable(tv(3, "x3"), kTriangle));
    CHECK_FALSE(is_instance_tvariable(tv(1, "x3"), kTriangle));    // outside the support
    CHECK_FALSE(is_instance_tvariable(tv(1, "x1^2"), kTriangle));  // wrong degree
    CHECK_FALSE(is_instance_tvariable(tv(0, "x1"), kTriangle));    // no block zero
    CHECK_FALSE(is_instance_tvariable(tv(4, "x1"), kTriangle));    // block out of range

    Instance squared{3, {IdealSpec{{1, 2}, 2}}};
    CHECK(is_instance_tvariable(tv(1, "x1*x2"), squared));
    CHECK_FALSE(is_instance_tvariable(tv(1, "x1"), squared));
}

TEST_CASE("instance hashing is stable and content-sensitive") {
    CHECK(instance_hash(kTriangle) == "ca926a58d3d5019a");
    Instance other = kTriangle;
    other.ideals[0].power = 2;
    CHECK(instance_hash(other) != instance_hash(kTriangle));
    CHECK(instance_hash(other).size() == 16);
}
