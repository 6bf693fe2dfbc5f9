#pragma once

#include "grammalc/error.hpp"
#include "grammalc/integer.hpp"
#include "grammalc/alphabet.hpp"
#include "grammalc/monomial.hpp"
#include "grammalc/laurent_poly.hpp"
#include "grammalc/expr.hpp"
#include "grammalc/uni_poly.hpp"
#include "grammalc/grammar.hpp"
#include "grammalc/egf.hpp"
#include "grammalc/tree.hpp"
#include "grammalc/tree_weight.hpp"
#include "grammalc/tree_oracle.hpp"
#include "grammalc/qtable.hpp"
#include "grammalc/report.hpp"
#include "grammalc/abel.hpp"
#include "grammalc/identities.hpp"
