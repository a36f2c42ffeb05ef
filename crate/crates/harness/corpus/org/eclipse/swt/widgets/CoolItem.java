package org.eclipse.swt.widgets;

public class CoolItem {
    public Font getFont() {
        checkWidget();
        boolean cached = parent.checkData(this, true);
        if (!cached) error(SWT.ERROR_WIDGET_DISPOSED);
        return font;
    }

    public Color getBackground() {
        checkWidget();
        boolean cached = parent.checkData(this, true);
        if (!cached) error(SWT.ERROR_WIDGET_DISPOSED);
        return background;
    }

    public Color getForeground() {
        checkWidget();
        boolean cached = parent.checkData(this, true);
        if (!cached) error(SWT.ERROR_WIDGET_DISPOSED);
        return foreground;
    }

    public Image getImage() {
        checkWidget();
        boolean cached = parent.checkData(this, true);
        if (!cached) error(SWT.ERROR_WIDGET_DISPOSED);
        return image;
    }

    public String getText() {
        checkWidget();
        boolean cached = parent.checkData(this, true);
        if (!cached) error(SWT.ERROR_WIDGET_DISPOSED);
        return text;
    }
}
