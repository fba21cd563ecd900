#pragma once

namespace e510::catalog_data {

extern const char* const kW11Body;
extern const char* const kW7Body;
extern const char* const kW4ETemplate;

}  // namespace e510::catalog_data
