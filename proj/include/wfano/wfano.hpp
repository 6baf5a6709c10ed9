#pragma once

#include <wfano/anticanonical.hpp>
#include <wfano/arith.hpp>
#include <wfano/blowup.hpp>
#include <wfano/chow.hpp>
#include <wfano/classify.hpp>
#include <wfano/cone.hpp>
#include <wfano/scenario.hpp>
#include <wfano/segre.hpp>
#include <wfano/serialize.hpp>
#include <wfano/verify.hpp>
