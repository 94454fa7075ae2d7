#include <gtest/gtest.h>

#include "pfol/error.hpp"

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  pfol::set_verify_mode(true);
  return RUN_ALL_TESTS();
}
