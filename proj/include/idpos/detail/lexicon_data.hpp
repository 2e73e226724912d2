#pragma once

// Generated by tools/gen_lexicon.py from data/lexicon.tsv. Do not edit.

#include <array>
#include <string_view>

namespace idpos::detail {

inline constexpr std::array<std::string_view, 7> kLexiconChunks = {
    R"LEX(get	VB
got	VBD
gotten	VBN
getting	VBG
gets	VBZ
set	NN
set	VB
set	VBD
set	VBN
setting	VBG
sets	VBZ
sets	NNS
add	VB
added	VBD
added	VBN
adding	VBG
adds	VBZ
remove	VB
removed	VBD
removed	VBN
removing	VBG
removes	VBZ
delete	VB
deleted	VBD
deleted	VBN
deleting	VBG
deletes	VBZ
create	VB
created	VBD
created	VBN
creating	VBG
creates	VBZ
make	VB
made	VBD
made	VBN
making	VBG
makes	VBZ
build	VB
built	VBD
built	VBN
building	VBG
building	NN
builds	VBZ
run	VB
ran	VBD
run	VBN
running	VBG
runs	VBZ
init	VB
inited	VBD
inited	VBN
initing	VBG
inits	VBZ
initialize	VB
initialized	VBD
initialized	VBN
initializing	VBG
initializes	VBZ
start	VB
started	VBD
started	VBN
starting	VBG
starts	VBZ
stop	VB
stopped	VBD
stopped	VBN
stopping	VBG
stops	VBZ
begin	VB
began	VBD
begun	VBN
beginning	VBG
begins	VBZ
end	VB
ended	VBD
ended	VBN
ending	VBG
ends	VBZ
open	VB
opened	VBD
opened	VBN
opening	VBG
opens	VBZ
close	VB
closed	VBD
closed	VBN
closing	VBG
closes	VBZ
read	VB
read	VBD
read	VBN
reading	VBG
reads	VBZ
write	VB
wrote	VBD
written	VBN
writing	VBG
writes	VBZ
load	NN
load	VB
loaded	VBD
loaded	VBN
loading	VBG
loads	VBZ
loads	NNS
save	VB
saved	VBD
saved	VBN
saving	VBG
saves	VBZ
store	VB
stored	VBD
stored	VBN
storing	VBG
stores	VBZ
fetch	VB
fetched	VBD
fetched	VBN
fetching	VBG
fetches	VBZ
find	VB
found	VBD
found	VBN
finding	VBG
finds	VBZ
search	NN
search	VB
searched	VBD
searched	VBN
searching	VBG
searches	VBZ
searches	NNS
lookup	VB
lookuped	VBD
lookuped	VBN
lookuping	VBG
lookups	VBZ
parse	VB
parsed	VBD
parsed	VBN
parsing	VBG
parses	VBZ
format	NN
format	VB
formated	VBD
formated	VBN
formating	VBG
formats	VBZ
formats	NNS
print	NN
print	VB
printed	VBD
printed	VBN
printing	VBG
prints	VBZ
prints	NNS
log	NN
log	VB
loged	VBD
loged	VBN
loging	VBG
logs	VBZ
logs	NNS
send	VB
sent	VBD
sent	VBN
sending	VBG
sends	VBZ
receive	VB
received	VBD
received	VBN
receiving	VBG
receives	VBZ
handle	NN
handle	VB
handled	VBD
handled	VBN
handling	VBG
handles	VBZ
handles	NNS
process	NN
process	VB
processed	VBD
processed	VBN
processing	VBG
processes	VBZ
processes	NNS
compute	VB
computed	VBD
computed	VBN
computing	VBG
computes	VBZ
calculate	VB
calculated	VBD
calculated	VBN
calculating	VBG
calculates	VBZ
update	VB
updated	VBD
updated	VBN
updating	VBG
updates	VBZ
insert	VB
inserted	VBD
inserted	VBN
inserting	VBG
inserts	VBZ
append	VB
appended	VBD
appended	VBN
appending	VBG
appends	VBZ
prepend	VB
prepended	VBD
prepended	VBN
prepending	VBG
prepends	VBZ
push	VB
pushed	VBD
pushed	VBN
pushing	VBG
pushes	VBZ
pop	VB
poped	VBD
poped	VBN
poping	VBG
pops	VBZ
put	VB
put	VBD
put	VBN
putting	VBG
puts	VBZ
take	VB
took	VBD
taken	VBN
taking	VBG
takes	VBZ
give	VB
gave	VBD
given	VBN
giving	VBG
gives	VBZ
apply	VB
applied	VBD
applied	VBN
applying	VBG
applies	VBZ
check	NN
check	VB
checked	VBD
checked	VBN
checking	VBG
checks	VBZ
checks	NNS
validate	VB
validated	VBD
validated	VBN
validating	VBG
validates	VBZ
verify	VB
verified	VBD
verified	VBN
verifying	VBG
verifies	VBZ
test	NN
test	VB
tested	VBD
tested	VBN
testing	VBG
tests	VBZ
tests	NNS
compare	VB
compared	VBD
compared	VBN
comparing	VBG
compares	VBZ
copy	NN
copy	VB
copied	VBD
copied	VBN
copying	VBG
copies	VBZ
copies	NNS
clone	VB
cloned	VBD
cloned	VBN
cloning	VBG
clones	VBZ
move	VB
moved	VBD
moved	VBN
moving	VBG
moves	VBZ
swap	VB
swapped	VBD
swapped	VBN
swapping	VBG
swaps	VBZ
sort	NN
sort	VB
sorted	VBD
sorted	VBN
sorting	VBG
sorts	VBZ
sorts	NNS
filter	NN
filter	VB
filtered	VBD
filtered	VBN
filtering	VBG
filters	VBZ
filters	NNS
map	NN
map	VB
mapped	VBD
mapped	VBN
mapping	VBG
maps	VBZ
maps	NNS
reduce	VB
reduced	VBD
reduced	VBN
reducing	VBG
reduces	VBZ
merge	VB
merged	VBD
merged	VBN
merging	VBG
merges	VBZ
split	VB
splited	VBD
splited	VBN
spliting	VBG
splits	VBZ
join	VB
joined	VBD
joined	VBN
joining	VBG
joins	VBZ
convert	VB
converted	VBD
converted	VBN
converting	VBG
converts	VBZ
transform	VB
transformed	VBD
transformed	VBN
transforming	VBG
transforms	VBZ
encode	VB
encoded	VBD
encoded	VBN
encoding	VBG
encodes	VBZ
decode	VB
decoded	VBD
decoded	VBN
decoding	VBG
decodes	VBZ
serialize	VB
serialized	VBD
serialized	VBN
serializing	VBG
serializes	VBZ
deserialize	VB
deserialized	VBD
deserialized	VBN
deserializing	VBG
deserializes	VBZ
render	VB
rendered	VBD
rendered	VBN
rendering	VBG
renders	VBZ
draw	VB
drew	VBD
drawn	VBN
drawing	VBG
draws	VBZ
paint	VB
painted	VBD
painted	VBN
painting	VBG
paints	VBZ
show	VB
showed	VBD
shown	VBN
showing	VBG
shows	VBZ
hide	VB
hid	VBD
hidden	VBN
hiding	VBG
hides	VBZ
enable	VB
enabled	VBD
enabled	VBN
enabling	VBG
enables	VBZ
disable	VB
)LEX",
    R"LEX(disabled	VBD
disabled	VBN
disabling	VBG
disables	VBZ
register	VB
registered	VBD
registered	VBN
registering	VBG
registers	VBZ
unregister	VB
unregistered	VBD
unregistered	VBN
unregistering	VBG
unregisters	VBZ
attach	VB
attached	VBD
attached	VBN
attaching	VBG
attaches	VBZ
detach	VB
detached	VBD
detached	VBN
detaching	VBG
detaches	VBZ
bind	VB
bound	VBD
bound	VBN
binding	VBG
binds	VBZ
unbind	VB
unbinded	VBD
unbinded	VBN
unbinding	VBG
unbinds	VBZ
connect	VB
connected	VBD
connected	VBN
connecting	VBG
connects	VBZ
disconnect	VB
disconnected	VBD
disconnected	VBN
disconnecting	VBG
disconnects	VBZ
lock	NN
lock	VB
locked	VBD
locked	VBN
locking	VBG
locks	VBZ
locks	NNS
unlock	VB
unlocked	VBD
unlocked	VBN
unlocking	VBG
unlocks	VBZ
wait	VB
waited	VBD
waited	VBN
waiting	VBG
waits	VBZ
notify	VB
notified	VBD
notified	VBN
notifying	VBG
notifies	VBZ
emit	VB
emitted	VBD
emitted	VBN
emitting	VBG
emits	VBZ
dispatch	VB
dispatched	VBD
dispatched	VBN
dispatching	VBG
dispatches	VBZ
call	NN
call	VB
called	VBD
called	VBN
calling	VBG
calls	VBZ
calls	NNS
invoke	VB
invoked	VBD
invoked	VBN
invoking	VBG
invokes	VBZ
execute	VB
executed	VBD
executed	VBN
executing	VBG
executes	VBZ
evaluate	VB
evaluated	VBD
evaluated	VBN
evaluating	VBG
evaluates	VBZ
resolve	VB
resolved	VBD
resolved	VBN
resolving	VBG
resolves	VBZ
reset	VB
reseted	VBD
reseted	VBN
reseting	VBG
resets	VBZ
clear	VB
cleared	VBD
cleared	VBN
clearing	VBG
clears	VBZ
flush	VB
flushed	VBD
flushed	VBN
flushing	VBG
flushes	VBZ
fill	VB
filled	VBD
filled	VBN
filling	VBG
fills	VBZ
allocate	VB
allocated	VBD
allocated	VBN
allocating	VBG
allocates	VBZ
free	VB
freed	VBD
freed	VBN
freeing	VBG
frees	VBZ
release	VB
released	VBD
released	VBN
releasing	VBG
releases	VBZ
destroy	VB
destroyed	VBD
destroyed	VBN
destroying	VBG
destroys	VBZ
dispose	VB
disposed	VBD
disposed	VBN
disposing	VBG
disposes	VBZ
acquire	VB
acquired	VBD
acquired	VBN
acquiring	VBG
acquires	VBZ
reserve	VB
reserved	VBD
reserved	VBN
reserving	VBG
reserves	VBZ
resize	VB
resized	VBD
resized	VBN
resizing	VBG
resizes	VBZ
scale	NN
scale	VB
scaled	VBD
scaled	VBN
scaling	VBG
scales	VBZ
scales	NNS
rotate	VB
rotated	VBD
rotated	VBN
rotating	VBG
rotates	VBZ
translate	VB
translated	VBD
translated	VBN
translating	VBG
translates	VBZ
select	VB
selected	VBD
selected	VBN
selecting	VBG
selects	VBZ
choose	VB
chose	VBD
chosen	VBN
choosing	VBG
chooses	VBZ
pick	VB
picked	VBD
picked	VBN
picking	VBG
picks	VBZ
accept	VB
accepted	VBD
accepted	VBN
accepting	VBG
accepts	VBZ
reject	VB
rejected	VBD
rejected	VBN
rejecting	VBG
rejects	VBZ
allow	VB
allowed	VBD
allowed	VBN
allowing	VBG
allows	VBZ
deny	VB
denied	VBD
denied	VBN
denying	VBG
denies	VBZ
ensure	VB
ensured	VBD
ensured	VBN
ensuring	VBG
ensures	VBZ
require	VB
required	VBD
required	VBN
requiring	VBG
requires	VBZ
assert	VB
asserted	VBD
asserted	VBN
asserting	VBG
asserts	VBZ
throw	VB
threw	VBD
thrown	VBN
throwing	VBG
throws	VBZ
catch	VB
caught	VBD
caught	VBN
catching	VBG
catches	VBZ
raise	VB
raised	VBD
raised	VBN
raising	VBG
raises	VBZ
fire	VB
fired	VBD
fired	VBN
firing	VBG
fires	VBZ
trigger	VB
triggered	VBD
triggered	VBN
triggering	VBG
triggers	VBZ
listen	VB
listened	VBD
listened	VBN
listening	VBG
listens	VBZ
observe	VB
observed	VBD
observed	VBN
observing	VBG
observes	VBZ
subscribe	VB
subscribed	VBD
subscribed	VBN
subscribing	VBG
subscribes	VBZ
unsubscribe	VB
unsubscribed	VBD
unsubscribed	VBN
unsubscribing	VBG
unsubscribes	VBZ
publish	VB
published	VBD
published	VBN
publishing	VBG
publishes	VBZ
post	VB
posted	VBD
posted	VBN
posting	VBG
posts	VBZ
request	NN
request	VB
requested	VBD
requested	VBN
requesting	VBG
requests	VBZ
requests	NNS
respond	VB
responded	VBD
responded	VBN
responding	VBG
responds	VBZ
reply	VB
replied	VBD
replied	VBN
replying	VBG
replies	VBZ
return	NN
return	VB
returned	VBD
returned	VBN
returning	VBG
returns	VBZ
returns	NNS
yield	VB
yielded	VBD
yielded	VBN
yielding	VBG
yields	VBZ
sleep	VB
sleeped	VBD
sleeped	VBN
sleeping	VBG
sleeps	VBZ
wake	VB
woke	VBD
woken	VBN
waking	VBG
wakes	VBZ
schedule	VB
scheduled	VBD
scheduled	VBN
scheduling	VBG
schedules	VBZ
cancel	VB
canceled	VBD
canceled	VBN
canceling	VBG
cancels	VBZ
abort	VB
aborted	VBD
aborted	VBN
aborting	VBG
aborts	VBZ
retry	VB
retried	VBD
retried	VBN
retrying	VBG
retries	VBZ
repeat	VB
repeated	VBD
repeated	VBN
repeating	VBG
repeats	VBZ
skip	VB
skipped	VBD
skipped	VBN
skipping	VBG
skips	VBZ
ignore	VB
ignored	VBD
ignored	VBN
ignoring	VBG
ignores	VBZ
track	NN
track	VB
tracked	VBD
tracked	VBN
tracking	VBG
tracks	VBZ
tracks	NNS
trace	NN
trace	VB
traced	VBD
traced	VBN
tracing	VBG
traces	VBZ
traces	NNS
count	NN
count	VB
counted	VBD
counted	VBN
counting	VBG
counts	VBZ
counts	NNS
measure	VB
measured	VBD
measured	VBN
measuring	VBG
measures	VBZ
collect	VB
collected	VBD
collected	VBN
collecting	VBG
collects	VBZ
gather	VB
gathered	VBD
gathered	VBN
gathering	VBG
gathers	VBZ
generate	VB
generated	VBD
generated	VBN
generating	VBG
generates	VBZ
)LEX",
    R"LEX(extract	VB
extracted	VBD
extracted	VBN
extracting	VBG
extracts	VBZ
inject	VB
injected	VBD
injected	VBN
injecting	VBG
injects	VBZ
install	VB
installed	VBD
installed	VBN
installing	VBG
installs	VBZ
uninstall	VB
uninstalled	VBD
uninstalled	VBN
uninstalling	VBG
uninstalls	VBZ
deploy	VB
deployed	VBD
deployed	VBN
deploying	VBG
deploys	VBZ
configure	VB
configured	VBD
configured	VBN
configuring	VBG
configures	VBZ
setup	VB
setuped	VBD
setuped	VBN
setuping	VBG
setups	VBZ
mount	VB
mounted	VBD
mounted	VBN
mounting	VBG
mounts	VBZ
unmount	VB
unmounted	VBD
unmounted	VBN
unmounting	VBG
unmounts	VBZ
enter	VB
entered	VBD
entered	VBN
entering	VBG
enters	VBZ
exit	VB
exited	VBD
exited	VBN
exiting	VBG
exits	VBZ
leave	VB
left	VBD
left	VBN
leaving	VBG
leaves	VBZ
visit	VB
visited	VBD
visited	VBN
visiting	VBG
visits	VBZ
walk	VB
walked	VBD
walked	VBN
walking	VBG
walks	VBZ
traverse	VB
traversed	VBD
traversed	VBN
traversing	VBG
traverses	VBZ
iterate	VB
iterated	VBD
iterated	VBN
iterating	VBG
iterates	VBZ
scan	VB
scaned	VBD
scaned	VBN
scaning	VBG
scans	VBZ
match	NN
match	VB
matched	VBD
matched	VBN
matching	VBG
matches	VBZ
matches	NNS
replace	VB
replaced	VBD
replaced	VBN
replacing	VBG
replaces	VBZ
rename	VB
renamed	VBD
renamed	VBN
renaming	VBG
renames	VBZ
define	VB
defined	VBD
defined	VBN
defining	VBG
defines	VBZ
declare	VB
declared	VBD
declared	VBN
declaring	VBG
declares	VBZ
assign	VB
assigned	VBD
assigned	VBN
assigning	VBG
assigns	VBZ
wrap	VB
wrapped	VBD
wrapped	VBN
wrapping	VBG
wraps	VBZ
unwrap	VB
unwraped	VBD
unwraped	VBN
unwraping	VBG
unwraps	VBZ
pack	VB
packed	VBD
packed	VBN
packing	VBG
packs	VBZ
unpack	VB
unpacked	VBD
unpacked	VBN
unpacking	VBG
unpacks	VBZ
compress	VB
compressed	VBD
compressed	VBN
compressing	VBG
compresses	VBZ
decompress	VB
decompressed	VBD
decompressed	VBN
decompressing	VBG
decompresses	VBZ
encrypt	VB
encrypted	VBD
encrypted	VBN
encrypting	VBG
encrypts	VBZ
decrypt	VB
decrypted	VBD
decrypted	VBN
decrypting	VBG
decrypts	VBZ
sign	NN
sign	VB
signed	VBD
signed	VBN
signing	VBG
signs	VBZ
signs	NNS
hash	NN
hash	VB
hashed	VBD
hashed	VBN
hashing	VBG
hashes	VBZ
hashes	NNS
cache	NN
cache	VB
cached	VBD
cached	VBN
caching	VBG
caches	VBZ
caches	NNS
invalidate	VB
invalidated	VBD
invalidated	VBN
invalidating	VBG
invalidates	VBZ
refresh	VB
refreshed	VBD
refreshed	VBN
refreshing	VBG
refreshes	VBZ
reload	VB
reloaded	VBD
reloaded	VBN
reloading	VBG
reloads	VBZ
restore	VB
restored	VBD
restored	VBN
restoring	VBG
restores	VBZ
backup	VB
backuped	VBD
backuped	VBN
backuping	VBG
backups	VBZ
sync	VB
synced	VBD
synced	VBN
syncing	VBG
syncs	VBZ
mark	NN
mark	VB
marked	VBD
marked	VBN
marking	VBG
marks	VBZ
marks	NNS
unmark	VB
unmarked	VBD
unmarked	VBN
unmarking	VBG
unmarks	VBZ
toggle	VB
toggled	VBD
toggled	VBN
toggling	VBG
toggles	VBZ
flip	VB
flipped	VBD
flipped	VBN
flipping	VBG
flips	VBZ
increment	VB
incremented	VBD
incremented	VBN
incrementing	VBG
increments	VBZ
decrement	VB
decremented	VBD
decremented	VBN
decrementing	VBG
decrements	VBZ
accumulate	VB
accumulated	VBD
accumulated	VBN
accumulating	VBG
accumulates	VBZ
contain	VB
contained	VBD
contained	VBN
containing	VBG
contains	VBZ
include	VB
included	VBD
included	VBN
including	VBG
includes	VBZ
exclude	VB
excluded	VBD
excluded	VBN
excluding	VBG
excludes	VBZ
use	VB
used	VBD
used	VBN
using	VBG
uses	VBZ
reuse	VB
reused	VBD
reused	VBN
reusing	VBG
reuses	VBZ
need	VB
needed	VBD
needed	VBN
needing	VBG
needs	VBZ
want	VB
wanted	VBD
wanted	VBN
wanting	VBG
wants	VBZ
try	VB
tried	VBD
tried	VBN
trying	VBG
tries	VBZ
keep	VB
kept	VBD
kept	VBN
keeping	VBG
keeps	VBZ
hold	VB
held	VBD
held	VBN
holding	VBG
holds	VBZ
grow	VB
grew	VBD
grown	VBN
growing	VBG
grows	VBZ
shrink	VB
shrank	VBD
shrunk	VBN
shrinking	VBG
shrinks	VBZ
expand	VB
expanded	VBD
expanded	VBN
expanding	VBG
expands	VBZ
collapse	VB
collapsed	VBD
collapsed	VBN
collapsing	VBG
collapses	VBZ
focus	NN
focus	VB
focused	VBD
focused	VBN
focusing	VBG
focuses	VBZ
focuses	NNS
blur	VB
blured	VBD
blured	VBN
bluring	VBG
blurs	VBZ
activate	VB
activated	VBD
activated	VBN
activating	VBG
activates	VBZ
deactivate	VB
deactivated	VBD
deactivated	VBN
deactivating	VBG
deactivates	VBZ
mutate	VB
mutated	VBD
mutated	VBN
mutating	VBG
mutates	VBZ
modify	VB
modified	VBD
modified	VBN
modifying	VBG
modifies	VBZ
change	NN
change	VB
changed	VBD
changed	VBN
changing	VBG
changes	VBZ
changes	NNS
edit	VB
edited	VBD
edited	VBN
editing	VBG
edits	VBZ
patch	NN
patch	VB
patched	VBD
patched	VBN
patching	VBG
patches	VBZ
patches	NNS
fix	VB
fixed	VBD
fixed	VBN
fixing	VBG
fixes	VBZ
adjust	VB
adjusted	VBD
adjusted	VBN
adjusting	VBG
adjusts	VBZ
align	VB
aligned	VBD
aligned	VBN
aligning	VBG
aligns	VBZ
normalize	VB
normalized	VBD
normalized	VBN
normalizing	VBG
normalizes	VBZ
clamp	VB
clamped	VBD
clamped	VBN
clamping	VBG
clamps	VBZ
limit	NN
limit	VB
limited	VBD
limited	VBN
limiting	VBG
limits	VBZ
limits	NNS
bound	VB
bounded	VBD
)LEX",
    R"LEX(bounded	VBN
bounding	VBG
bounds	VBZ
report	NN
report	VB
reported	VBD
reported	VBN
reporting	VBG
reports	VBZ
reports	NNS
is	VBZ
has	VBZ
can	MD
should	MD
must	MD
will	MD
do	VB
does	VBZ
did	VBD
be	VB
are	VBP
was	VBD
were	VBD
been	VBN
am	VBP
user	NN
users	NNS
token	NN
tokens	NNS
list	NN
list	VB
lists	NNS
head	NN
heads	NNS
tail	NN
tails	NNS
id	NN
ids	NNS
name	NN
name	VB
names	NNS
value	NN
value	VB
values	NNS
key	NN
key	VB
keys	NNS
node	NN
node	VB
nodes	NNS
item	NN
item	VB
items	NNS
index	NN
index	VB
indices	NNS
table	NN
table	VB
tables	NNS
link	NN
link	VB
links	NNS
record	NN
record	VB
records	NNS
response	NN
response	VB
responses	NNS
event	NN
event	VB
events	NNS
message	NN
message	VB
messages	NNS
file	NN
file	VB
files	NNS
path	NN
paths	NNS
dir	NN
dirs	NNS
directory	NN
directories	NNS
buffer	NN
buffer	VB
buffers	NNS
stream	NN
stream	VB
streams	NNS
control	NN
control	VB
controls	NNS
display	NN
display	VB
displays	NNS
view	NN
view	VB
views	NNS
frame	NN
frame	VB
frames	NNS
page	NN
page	VB
pages	NNS
field	NN
field	VB
fields	NNS
button	NN
button	VB
buttons	NNS
window	NN
windows	NNS
widget	NN
widgets	NNS
data	NN
info	NN
size	NN
sizes	NNS
length	NN
lengths	NNS
width	NN
widths	NNS
height	NN
heights	NNS
depth	NN
depths	NNS
offset	NN
offsets	NNS
position	NN
positions	NNS
pos	NN
poses	NNS
location	NN
locations	NNS
address	NN
addresses	NNS
port	NN
ports	NNS
host	NN
hosts	NNS
server	NN
servers	NNS
client	NN
clients	NNS
connection	NN
connections	NNS
socket	NN
sockets	NNS
channel	NN
channels	NNS
queue	NN
queues	NNS
stack	NN
stacks	NNS
heap	NN
heaps	NNS
tree	NN
trees	NNS
graph	NN
graphs	NNS
edge	NN
edges	NNS
vertex	NN
vertices	NNS
matrix	NN
matrices	NNS
vector	NN
vectors	NNS
array	NN
arrays	NNS
string	NN
strings	NNS
char	NN
chars	NNS
number	NN
numbers	NNS
integer	NN
integers	NNS
float	NN
floats	NNS
double	NN
doubles	NNS
byte	NN
bytes	NNS
bit	NN
bits	NNS
flag	NN
flags	NNS
mode	NN
modes	NNS
state	NN
state	VB
states	NNS
status	NN
statuses	NNS
type	NN
type	VB
types	NNS
kind	NN
kinds	NNS
class	NN
class	VB
classes	NNS
object	NN
objects	NNS
instance	NN
instances	NNS
entity	NN
entities	NNS
element	NN
elements	NNS
component	NN
components	NNS
module	NN
modules	NNS
system	NN
systems	NNS
service	NN
services	NNS
manager	NN
managers	NNS
handler	NN
handlers	NNS
listener	NN
listeners	NNS
observer	NN
observers	NNS
factory	NN
factories	NNS
builder	NN
builders	NNS
provider	NN
providers	NNS
adapter	NN
adapters	NNS
wrapper	NN
wrappers	NNS
proxy	NN
proxies	NNS
context	NN
contexts	NNS
session	NN
sessions	NNS
config	NN
configs	NNS
configuration	NN
configurations	NNS
setting	NN
settings	NNS
option	NN
options	NNS
parameter	NN
parameters	NNS
param	NN
params	NNS
argument	NN
arguments	NNS
arg	NN
args	NNS
property	NN
properties	NNS
attribute	NN
attributes	NNS
member	NN
members	NNS
method	NN
methods	NNS
function	NN
functions	NNS
callback	NN
callbacks	NNS
delegate	NN
delegates	NNS
timer	NN
timers	NNS
thread	NN
threads	NNS
task	NN
task	VB
tasks	NNS
job	NN
jobs	NNS
worker	NN
workers	NNS
pool	NN
pools	NNS
mutex	NN
mutexes	NNS
semaphore	NN
semaphores	NNS
signal	NN
signals	NNS
slot	NN
slots	NNS
result	NN
results	NNS
error	NN
errors	NNS
exception	NN
exceptions	NNS
warning	NN
warnings	NNS
text	NN
texts	NNS
content	NN
contents	NNS
body	NN
bodies	NNS
header	NN
headers	NNS
footer	NN
footers	NNS
title	NN
titles	NNS
label	NN
label	VB
labels	NNS
tag	NN
tag	VB
tags	NNS
icon	NN
icons	NNS
image	NN
images	NNS
texture	NN
textures	NNS
color	NN
colors	NNS
colour	NN
colours	NNS
font	NN
fonts	NNS
style	NN
styles	NNS
theme	NN
themes	NNS
layout	NN
layouts	NNS
panel	NN
panels	NNS
dialog	NN
dialogs	NNS
menu	NN
menus	NNS
tab	NN
tabs	NNS
toolbar	NN
toolbars	NNS
cursor	NN
cursors	NNS
mouse	NN
mice	NNS
keyboard	NN
keyboards	NNS
input	NN
input	VB
inputs	NNS
output	NN
output	VB
outputs	NNS
source	NN
sources	NNS
target	NN
targets	NNS
destination	NN
destinations	NNS
origin	NN
origins	NNS
parent	NN
parents	NNS
child	NN
children	NNS
sibling	NN
siblings	NNS
root	NN
roots	NNS
leaf	NN
leaves	NNS
level	NN
levels	NNS
layer	NN
layers	NNS
scene	NN
scenes	NNS
camera	NN
cameras	NNS
light	NN
lights	NNS
mesh	NN
meshes	NNS
model	NN
models	NNS
shader	NN
shaders	NNS
material	NN
materials	NNS
pixel	NN
pixels	NNS
point	NN
point	VB
)LEX",
    R"LEX(points	NNS
line	NN
lines	NNS
rect	NN
rects	NNS
rectangle	NN
rectangles	NNS
circle	NN
circles	NNS
shape	NN
shapes	NNS
box	NN
boxes	NNS
region	NN
regions	NNS
area	NN
areas	NNS
zone	NN
zones	NNS
range	NN
ranges	NNS
interval	NN
intervals	NNS
period	NN
periods	NNS
time	NN
times	NNS
date	NN
dates	NNS
timestamp	NN
timestamps	NNS
duration	NN
durations	NNS
delay	NN
delays	NNS
timeout	NN
timeouts	NNS
rate	NN
rates	NNS
speed	NN
speeds	NNS
velocity	NN
velocities	NNS
acceleration	NN
accelerations	NNS
force	NN
forces	NNS
mass	NN
masses	NNS
weight	NN
weights	NNS
distance	NN
distances	NNS
angle	NN
angles	NNS
direction	NN
directions	NNS
rotation	NN
rotations	NNS
transform	NN
transforms	NNS
factor	NN
factors	NNS
ratio	NN
ratios	NNS
percent	NN
percents	NNS
total	NN
totals	NNS
sum	NN
sums	NNS
average	NN
averages	NNS
mean	NN
means	NNS
min	NN
mins	NNS
max	NN
maxes	NNS
threshold	NN
thresholds	NNS
bound	NN
bounds	NNS
capacity	NN
capacities	NNS
quota	NN
quotas	NNS
budget	NN
budgets	NNS
cost	NN
costs	NNS
price	NN
prices	NNS
amount	NN
amounts	NNS
account	NN
accounts	NNS
customer	NN
customers	NNS
order	NN
order	VB
orders	NNS
product	NN
products	NNS
invoice	NN
invoices	NNS
payment	NN
payments	NNS
transaction	NN
transactions	NNS
balance	NN
balances	NNS
currency	NN
currencies	NNS
bank	NN
banks	NNS
money	NN
moneys	NNS
stock	NN
stocks	NNS
market	NN
markets	NNS
trade	NN
trades	NNS
query	NN
query	VB
queries	NNS
database	NN
databases	NNS
db	NN
dbs	NNS
schema	NN
schemas	NNS
column	NN
columns	NNS
row	NN
rows	NNS
cell	NN
cells	NNS
sheet	NN
sheets	NNS
document	NN
documents	NNS
doc	NN
docs	NNS
note	NN
notes	NNS
comment	NN
comments	NNS
word	NN
words	NNS
letter	NN
letters	NNS
symbol	NN
symbols	NNS
version	NN
versions	NNS
revision	NN
revisions	NNS
commit	NN
commits	NNS
branch	NN
branches	NNS
repository	NN
repositories	NNS
repo	NN
repos	NNS
project	NN
projects	NNS
build	NN
builds	NNS
release	NN
releases	NNS
package	NN
packages	NNS
library	NN
libraries	NNS
framework	NN
frameworks	NNS
plugin	NN
plugins	NNS
extension	NN
extensions	NNS
case	NN
cases	NNS
suite	NN
suites	NNS
unit	NN
units	NNS
assertion	NN
assertions	NNS
spec	NN
specs	NNS
mock	NN
mocks	NNS
stub	NN
stubs	NNS
fixture	NN
fixtures	NNS
sample	NN
samples	NNS
example	NN
examples	NNS
template	NN
templates	NNS
pattern	NN
patterns	NNS
rule	NN
rules	NNS
policy	NN
policies	NNS
strategy	NN
strategies	NNS
algorithm	NN
algorithms	NNS
solver	NN
solvers	NNS
engine	NN
engines	NNS
driver	NN
drivers	NNS
device	NN
devices	NNS
hardware	NN
hardwares	NNS
memory	NN
memories	NNS
disk	NN
disks	NNS
storage	NN
storages	NNS
registry	NN
registries	NNS
environment	NN
environments	NNS
platform	NN
platforms	NNS
network	NN
networks	NNS
packet	NN
packets	NNS
protocol	NN
protocols	NNS
route	NN
routes	NNS
router	NN
routers	NNS
endpoint	NN
endpoints	NNS
url	NN
urls	NNS
uri	NN
uris	NNS
domain	NN
domains	NNS
gateway	NN
gateways	NNS
firewall	NN
firewalls	NNS
security	NN
securities	NNS
secret	NN
secrets	NNS
password	NN
passwords	NNS
credential	NN
credentials	NNS
certificate	NN
certificates	NNS
permission	NN
permissions	NNS
role	NN
roles	NNS
group	NN
group	VB
groups	NNS
team	NN
teams	NNS
owner	NN
owners	NNS
admin	NN
admins	NNS
audio	NN
audios	NNS
video	NN
videos	NNS
media	NN
medias	NNS
clip	NN
clips	NNS
sound	NN
sounds	NNS
volume	NN
volumes	NNS
music	NN
musics	NNS
player	NN
players	NNS
game	NN
games	NNS
score	NN
scores	NNS
enemy	NN
enemies	NNS
weapon	NN
weapons	NNS
msg	NN
msgs	NNS
ptr	NN
ptrs	NNS
str	NN
strs	NNS
num	NN
nums	NNS
len	NN
lens	NNS
idx	NN
idxes	NNS
cnt	NN
cnts	NNS
ctx	NN
ctxes	NNS
cfg	NN
cfgs	NNS
buf	NN
bufs	NNS
src	NN
srcs	NNS
dst	NN
dsts	NNS
tmp	NN
tmps	NNS
val	NN
vals	NNS
var	NN
vars	NNS
obj	NN
objs	NNS
elem	NN
elems	NNS
attr	NN
attrs	NNS
desc	NN
descs	NNS
stats	NNS
iterator	NN
iterators	NNS
pointer	NN
pointers	NNS
reference	NN
references	NNS
entry	NN
entries	NNS
bucket	NN
buckets	NNS
chunk	NN
chunks	NNS
block	NN
block	VB
blocks	NNS
segment	NN
segments	NNS
piece	NN
pieces	NNS
part	NN
parts	NNS
fragment	NN
fragments	NNS
start	NN
starts	NNS
end	NN
ends	NNS
begin	NN
begins	NNS
finish	NN
finishes	NNS
beginning	NN
beginnings	NNS
middle	NN
middles	NNS
top	NN
tops	NNS
bottom	NN
bottoms	NNS
left	NN
lefts	NNS
right	NN
rights	NNS
front	NN
fronts	NNS
back	NN
backs	NNS
center	NN
centers	NNS
side	NN
sides	NNS
corner	NN
corners	NNS
sentence	NN
sentences	NNS
)LEX",
    R"LEX(paragraph	NN
paragraphs	NNS
language	NN
languages	NNS
grammar	NN
grammars	NNS
parser	NN
parsers	NNS
lexer	NN
lexers	NNS
scanner	NN
scanners	NNS
compiler	NN
compilers	NNS
interpreter	NN
interpreters	NNS
ast	NN
asts	NNS
expression	NN
expressions	NNS
statement	NN
statements	NNS
loop	NN
loops	NNS
condition	NN
conditions	NNS
predicate	NN
predicates	NNS
clause	NN
clauses	NNS
selector	NN
selectors	NNS
visitor	NN
visitors	NNS
walker	NN
walkers	NNS
generator	NN
generators	NNS
emitter	NN
emitters	NNS
writer	NN
writers	NNS
reader	NN
readers	NNS
loader	NN
loaders	NNS
saver	NN
savers	NNS
accessor	NN
accessors	NNS
mutator	NN
mutators	NNS
getter	NN
getters	NNS
setter	NN
setters	NNS
operator	NN
operators	NNS
operand	NN
operands	NNS
modifier	NN
modifiers	NNS
qualifier	NN
qualifiers	NNS
specifier	NN
specifiers	NNS
identifier	NN
identifiers	NNS
variable	NN
variables	NNS
constant	NN
constants	NNS
literal	NN
literals	NNS
singleton	NN
singletons	NNS
prototype	NN
prototypes	NNS
interface	NN
interfaces	NNS
implementation	NN
implementations	NNS
abstraction	NN
abstractions	NNS
base	NN
bases	NNS
derived	NN
deriveds	NNS
super	NN
supers	NNS
sub	NN
subs	NNS
dog	NN
dogs	NNS
cat	NN
cats	NNS
animal	NN
animals	NNS
car	NN
cars	NNS
city	NN
cities	NNS
street	NN
streets	NNS
shoe	NN
shoes	NNS
faucet	NN
faucets	NNS
mother	NN
mothers	NNS
father	NN
fathers	NNS
house	NN
houses	NNS
room	NN
rooms	NNS
door	NN
doors	NNS
apple	NN
apples	NNS
book	NN
books	NNS
people	NNS
person	NN
new	JJ
old	JJ
first	JJ
last	JJ
next	JJ
previous	JJ
prev	JJ
current	JJ
default	JJ
main	JJ
primary	JJ
secondary	JJ
temporary	JJ
temp	JJ
global	JJ
local	JJ
static	JJ
dynamic	JJ
public	JJ
private	JJ
protected	JJ
internal	JJ
external	JJ
visible	JJ
hidden	JJ
active	JJ
inactive	JJ
enabled	JJ
disabled	JJ
valid	JJ
invalid	JJ
empty	JJ
full	JJ
null	JJ
nil	JJ
true	JJ
false	JJ
good	JJ
bad	JJ
big	JJ
small	JJ
large	JJ
little	JJ
long	JJ
short	JJ
high	JJ
low	JJ
hot	JJ
cold	JJ
red	JJ
green	JJ
blue	JJ
black	JJ
white	JJ
gray	JJ
grey	JJ
dark	JJ
bright	JJ
light	JJ
heavy	JJ
fast	JJ
slow	JJ
quick	JJ
safe	JJ
unsafe	JJ
open	JJ
closed	JJ
ready	JJ
busy	JJ
idle	JJ
dirty	JJ
clean	JJ
raw	JJ
native	JJ
abstract	JJ
concrete	JJ
virtual	JJ
real	JJ
actual	JJ
total	JJ
partial	JJ
final	JJ
initial	JJ
original	JJ
single	JJ
double	JJ
multiple	JJ
unique	JJ
common	JJ
shared	JJ
mutable	JJ
immutable	JJ
constant	JJ
readonly	JJ
writable	JJ
executable	JJ
available	JJ
missing	JJ
optional	JJ
required	JJ
mandatory	JJ
max	JJ
min	JJ
maximum	JJ
minimum	JJ
average	JJ
random	JJ
sorted	JJ
unsorted	JJ
ordered	JJ
linear	JJ
binary	JJ
recursive	JJ
parallel	JJ
serial	JJ
async	JJ
sync	JJ
remote	JJ
absolute	JJ
relative	JJ
logical	JJ
physical	JJ
visual	JJ
graphic	JJ
graphical	JJ
numeric	JJ
numerical	JJ
textual	JJ
lexical	JJ
simple	JJ
complex	JJ
basic	JJ
advanced	JJ
custom	JJ
generic	JJ
specific	JJ
special	JJ
normal	JJ
standard	JJ
regular	JJ
strict	JJ
loose	JJ
exact	JJ
upper	JJ
lower	JJ
inner	JJ
outer	JJ
left	JJ
right	JJ
top	JJ
bottom	JJ
front	JJ
back	JJ
middle	JJ
central	JJ
whole	JJ
entire	JJ
same	JJ
different	JJ
other	JJ
early	JJ
late	JJ
recent	JJ
pending	JJ
selected	JJ
focused	JJ
checked	JJ
expanded	JJ
collapsed	JJ
locked	JJ
unlocked	JJ
bigger	JJR
smaller	JJR
larger	JJR
higher	JJR
lower	JJR
faster	JJR
slower	JJR
newer	JJR
older	JJR
greater	JJR
lesser	JJR
biggest	JJS
smallest	JJS
largest	JJS
highest	JJS
lowest	JJS
fastest	JJS
slowest	JJS
newest	JJS
oldest	JJS
greatest	JJS
least	JJS
best	JJS
worst	JJS
better	JJR
worse	JJR
more	JJR
less	JJR
most	JJS
very	RB
quickly	RB
slowly	RB
really	RB
seriously	RB
loudly	RB
impatiently	RB
always	RB
never	RB
often	RB
sometimes	RB
already	RB
again	RB
still	RB
just	RB
only	RB
also	RB
too	RB
now	RB
then	RB
here	RB
there	RB
soon	RB
later	RB
once	RB
twice	RB
forward	RB
backward	RB
maybe	RB
perhaps	RB
almost	RB
nearly	RB
directly	RB
immediately	RB
eventually	RB
lazily	RB
eagerly	RB
safely	RB
recursively	RB
automatically	RB
manually	RB
explicitly	RB
implicitly	RB
up	RP
down	RP
out	RP
off	RP
away	RP
faster	RBR
sooner	RBR
in	IN
on	IN
at	IN
of	IN
for	IN
from	IN
by	IN
with	IN
without	IN
into	IN
onto	IN
over	IN
under	IN
about	IN
after	IN
before	IN
between	IN
through	IN
during	IN
within	IN
against	IN
among	IN
per	IN
via	IN
behind	IN
above	IN
)LEX",
    R"LEX(below	IN
across	IN
along	IN
around	IN
beside	IN
besides	IN
beyond	IN
inside	IN
outside	IN
near	IN
since	IN
until	IN
upon	IN
toward	IN
towards	IN
than	IN
like	IN
unlike	IN
except	IN
despite	IN
to	TO
the	DT
a	DT
an	DT
this	DT
that	DT
these	DT
those	DT
each	DT
every	DT
all	DT
any	DT
some	DT
no	DT
which	DT
what	DT
whatever	DT
either	DT
neither	DT
another	DT
both	DT
and	CC
or	CC
but	CC
nor	CC
yet	CC
so	CC
i	PRP
you	PRP
he	PRP
she	PRP
it	PRP
we	PRP
they	PRP
me	PRP
him	PRP
her	PRP
us	PRP
them	PRP
one	PRP
self	PRP
itself	PRP
myself	PRP
yourself	PRP
themselves	PRP
my	PRP$
your	PRP$
his	PRP$
its	PRP$
our	PRP$
their	PRP$
whose	PRP$
could	MD
would	MD
may	MD
might	MD
shall	MD
zero	CD
one	CD
two	CD
three	CD
four	CD
five	CD
six	CD
seven	CD
eight	CD
nine	CD
ten	CD
hundred	CD
thousand	CD
million	CD
billion	CD
gl	NNP
glew	NNP
gimp	NNP
qt	NNP
wx	NNP
gtk	NNP
sdl	NNP
vk	NNP
mfc	NNP
afx	NNP
std	NNP
etc	FW
vs	FW
)LEX",
};

} // namespace idpos::detail
