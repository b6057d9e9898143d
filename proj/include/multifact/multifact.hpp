#ifndef MULTIFACT_MULTIFACT_HPP
#define MULTIFACT_MULTIFACT_HPP

#include "arith.hpp"
#include "counting.hpp"
#include "evaluate.hpp"
#include "oracle.hpp"
#include "partition_counts.hpp"
#include "partitions.hpp"
#include "verify.hpp"

#endif // MULTIFACT_MULTIFACT_HPP
