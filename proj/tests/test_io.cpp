#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "bjorth/io.hpp"
#include "bjorth/random.hpp"

using namespace bjorth;

TEST_CASE("serialization round-trips bit-exactly") {
    Rng rng(61);
    const AlgebraShape shape{{2, 3, 1}};
    for (int t = 0; t < 10; ++t) {
        AlgebraElement A = AlgebraElement::zero(shape);
        for (std::size_t k = 0; k < A.blocks.size(); ++k)
            A.blocks[k] = rng.matrix(shape.block_sizes[k], shape.block_sizes[k]);
        const AlgebraElement B = parse_algebra(serialize_algebra(A));
        REQUIRE(B.shape == A.shape);
        for (std::size_t k = 0; k < A.blocks.size(); ++k)
            for (std::size_t e = 0; e < A.blocks[k].data().size(); ++e)
                CHECK(A.blocks[k].data()[e] == B.blocks[k].data()[e]);
    }
}

TEST_CASE("parser rejects malformed documents") {
    CHECK_THROWS_AS(parse_algebra("not json"), ParseError);
    CHECK_THROWS_AS(parse_algebra("{\"shape\": [2]}"), ParseError);
    CHECK_THROWS_AS(parse_algebra("{\"shape\": [2], \"blocks\": [[[0,0]]]}"), ParseError);
    CHECK_THROWS_AS(parse_algebra("{\"shape\": [1], \"blocks\": [[[0]]]}"), ParseError);
    CHECK_THROWS_AS(parse_algebra("{\"shape\": [1], \"blocks\": [[\"x\"]]}"), ParseError);
}

TEST_CASE("numerical range export of a nilpotent is a circle of radius 1/2") {
    AlgebraElement A = AlgebraElement::zero(AlgebraShape{{2}});
    A.blocks[0](0, 1) = 1.0;
    std::ostringstream out;
    write_numrange_csv(out, A.embed(), 64);
    std::istringstream in(out.str());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        double theta = 0.0, re = 0.0, im = 0.0;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &theta, &re, &im) == 3);
        CHECK(std::sqrt(re * re + im * im) == doctest::Approx(0.5).epsilon(1e-9));
        ++rows;
    }
    CHECK(rows == 64);
}

TEST_CASE("numerical range export of diag(1,-1) stays on the real segment") {
    AlgebraElement A = AlgebraElement::zero(AlgebraShape{{2}});
    A.blocks[0](0, 0) = 1.0;
    A.blocks[0](1, 1) = -1.0;
    std::ostringstream out;
    write_numrange_csv(out, A.embed(), 32);
    std::istringstream in(out.str());
    std::string line;
    while (std::getline(in, line)) {
        double theta = 0.0, re = 0.0, im = 0.0;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &theta, &re, &im) == 3);
        CHECK(std::abs(im) < 1e-10);
        CHECK(std::abs(re) <= 1.0 + 1e-10);
    }
}
