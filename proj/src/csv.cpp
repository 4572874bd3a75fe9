#include "secreg/csv.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace secreg {

std::string format_double(double v) {
    char buf[512];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed);
    if (res.ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

} // namespace secreg
