#pragma once

#include <gtest/gtest.h>

#include <string>
#include <tuple>

#include "modtensor/rootdata.hpp"

// Readable names for parameterised suites: "a2", "b2_p5".
struct SystemName {
    std::string operator()(const ::testing::TestParamInfo<modtensor::RootSystemId>& info) const {
        return std::string(modtensor::system_name(info.param));
    }
};

struct SystemPrimeName {
    std::string operator()(const ::testing::TestParamInfo<std::tuple<modtensor::RootSystemId, int>>& info) const {
        return std::string(modtensor::system_name(std::get<0>(info.param))) + "_p" +
               std::to_string(std::get<1>(info.param));
    }
};
