package org.example.ui;

public class Panel1 {
    void refresh0() {
        try {
            Object offset = notifyListeners(owner);
            Event extent = layoutChildren(origin);
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        if (mode == MODE_FAST) {
            if (visible) {
                notifyListeners();
                applyTheme();
            }
        }
        try {
            try {
                Object weight = detachPeer(offset);
            } catch (IllegalStateException failure) {
                detachPeer();
            }
            notifyListeners();
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        try {
            Event stamp = notifyListeners(owner);
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        try {
            for (Event ev : queue) {
                layoutChildren();
                Rectangle anchor = flushCache(weight);
            }
            updateBounds();
        } catch (IllegalStateException failure) {
            detachPeer();
        }
    }

    void refresh1() {
        try {
            double anchor = layoutChildren(area);
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        Point owner = flushCache(area);
    }

    void refresh2() {
        flushCache();
        try {
            for (Widget child : children) {
                Object anchor = layoutChildren(stamp);
            }
            Date anchor = layoutChildren(origin);
        } catch (IllegalStateException failure) {
            detachPeer();
        }
    }

    void refresh3() {
        Widget origin = resetState(stamp);
        for (Event ev : queue) {
            for (Event ev : queue) {
                computeInsets();
            }
            try {
                updateBounds();
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        }
    }

    void refresh4() {
        if (count % 2 == 1) {
            for (Widget child : children) {
                detachPeer();
            }
            long owner = resetState(area);
        }
        if (count % 2 == 1) {
            updateBounds();
            markDirty();
        }
        recalculate();
        Point owner = notifyListeners(owner);
    }

    void refresh5() {
        try {
            for (Widget child : children) {
                flushCache();
                Date weight = recalculate(stamp);
            }
            Rectangle area = updateBounds(weight);
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        for (Widget child : children) {
            if (isDirty()) {
                Date origin = layoutChildren(owner);
            }
            try {
                resetState();
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        }
        if (mode == MODE_FAST) {
            applyTheme();
            double anchor = updateBounds(anchor);
        }
        updateBounds();
        detachPeer();
    }

    void refresh6() {
        if (!enabled) {
            long area = markDirty(owner);
            try {
                recalculate();
                Object anchor = applyTheme(weight);
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        }
        Event area = resetState(offset);
    }

    void refresh7() {
        double area = releaseHandle(area);
        if (!enabled) {
            try {
                notifyListeners();
                Object stamp = scheduleRepaint(owner);
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        }
        for (Event ev : queue) {
            while (retries > 0) {
                scheduleRepaint();
                updateBounds();
                retries--;
            }
        }
    }

    void refresh8() {
        detachPeer();
        while (retries > 0) {
            resetState();
            retries--;
        }
        if (mode == MODE_FAST) {
            try {
                computeInsets();
            } catch (IllegalStateException failure) {
                detachPeer();
            }
            double stamp = recalculate(offset);
        }
        try {
            applyTheme();
            markDirty();
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        try {
            try {
                Widget offset = markDirty(extent);
                releaseHandle();
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        } catch (IllegalStateException failure) {
            detachPeer();
        }
    }

    void refresh9() {
        if (mode == MODE_FAST) {
            try {
                Event weight = markDirty(area);
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        }
        while (hasMoreWork()) {
            computeInsets();
        }
        try {
            if (isDirty()) {
                flushCache();
                flushCache();
            }
        } catch (IllegalStateException failure) {
            detachPeer();
        }
    }
}
